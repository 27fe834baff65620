// Copyright 2026 The pampo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pampo/pos.h"

#include <fstream>
#include <sstream>

#include "lexicon.h"
#include "pampo/error.h"
#include "pampo/unicode.h"

namespace pampo {

const char *to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kProp: return "prop";
    case PosTag::kNoun: return "n";
    case PosTag::kAdj: return "adj";
    case PosTag::kVerbFinite: return "v-fi";
    case PosTag::kVerbInfinitive: return "v-inf";
    case PosTag::kVerbParticiple: return "v-pcp";
    case PosTag::kAdv: return "adv";
    case PosTag::kPronDet: return "pron-det";
    case PosTag::kPronPers: return "pron-pers";
    case PosTag::kPrep: return "prp";
    case PosTag::kArt: return "art";
    case PosTag::kNum: return "num";
    case PosTag::kConj: return "conj";
    case PosTag::kPunc: return "punc";
    case PosTag::kOther: return "other";
  }
  return "other";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  static constexpr PosTag kAll[] = {
      PosTag::kProp,      PosTag::kNoun,           PosTag::kAdj,
      PosTag::kVerbFinite, PosTag::kVerbInfinitive, PosTag::kVerbParticiple,
      PosTag::kAdv,       PosTag::kPronDet,        PosTag::kPronPers,
      PosTag::kPrep,      PosTag::kArt,            PosTag::kNum,
      PosTag::kConj,      PosTag::kPunc,           PosTag::kOther};
  for (PosTag t : kAll) {
    if (name == to_string(t)) return t;
  }
  if (name == "v-fin") return PosTag::kVerbFinite;
  return std::nullopt;
}

TaggedCandidate tag_candidate(const TagProvider &provider, const Document &doc,
                              const Sentence &sentence, TokenSpan span) {
  if (span.first > span.last || span.last >= sentence.tokens.size()) {
    throw std::out_of_range("token span outside sentence " +
                            std::to_string(sentence.index));
  }
  std::vector<PosTag> tags;
  try {
    tags = provider.tag_sentence(doc, sentence);
  } catch (const TaggingError &) {
    throw;
  } catch (const std::exception &e) {
    throw TaggingError(provider.identity(), e.what());
  }
  if (tags.size() != sentence.tokens.size()) {
    throw TaggingError(provider.identity(),
                       "returned " + std::to_string(tags.size()) +
                           " tags for " +
                           std::to_string(sentence.tokens.size()) +
                           " tokens in document '" + doc.id() +
                           "' sentence " + std::to_string(sentence.index));
  }
  TaggedCandidate out;
  out.tokens.assign(sentence.tokens.begin() + span.first,
                    sentence.tokens.begin() + span.last + 1);
  out.tags.assign(tags.begin() + span.first, tags.begin() + span.last + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Builtin tagger.

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

PosTag by_suffix(std::string_view lower) {
  for (auto s : {"ção", "ções", "dade", "dades", "mento", "mentos"}) {
    if (ends_with(lower, s)) return PosTag::kNoun;
  }
  for (auto s : {"ou", "amos", "emos", "am"}) {
    if (ends_with(lower, s)) return PosTag::kVerbFinite;
  }
  if (ends_with(lower, "ndo")) return PosTag::kVerbParticiple;
  return PosTag::kNoun;
}

std::optional<PosTag> lookup(const std::unordered_map<std::string, PosTag> &lex,
                             const std::string &key) {
  auto it = lex.find(key);
  if (it == lex.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::optional<PosTag> closed_class_tag(std::string_view word) {
  return lookup(lexicon::closed_class(), unicode::fold_key(word));
}

std::size_t open_class_lexicon_size() { return lexicon::open_class().size(); }
std::size_t closed_class_lexicon_size() {
  return lexicon::closed_class().size();
}

std::vector<PosTag> BuiltinTagger::tag_tokens(
    const std::vector<Token> &tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  bool seen_word = false;
  for (const Token &token : tokens) {
    if (token.kind == TokenKind::kNumber) {
      tags.push_back(PosTag::kNum);
      continue;
    }
    if (token.kind == TokenKind::kPunctuation) {
      tags.push_back(PosTag::kPunc);
      continue;
    }
    bool initial = !seen_word;
    seen_word = true;
    std::string lower = unicode::fold_key(token.surface);

    if (auto t = lookup(lexicon::closed_class(), lower)) {
      tags.push_back(*t);
      continue;
    }
    if (is_capitalized(token)) {
      if (unicode::length(token.surface) == 1) {
        tags.push_back(PosTag::kOther);
      } else if (!initial) {
        tags.push_back(PosTag::kProp);
      } else if (auto t = lookup(lexicon::open_class(), lower)) {
        tags.push_back(*t);
      } else if (ends_with(lower, "mente") && lower.size() > 7) {
        tags.push_back(PosTag::kAdv);
      } else {
        tags.push_back(PosTag::kProp);
      }
      continue;
    }
    if (auto t = lookup(lexicon::open_class(), lower)) {
      tags.push_back(*t);
    } else if (ends_with(lower, "mente")) {
      tags.push_back(PosTag::kAdv);
    } else {
      tags.push_back(by_suffix(lower));
    }
  }
  return tags;
}

std::vector<PosTag> BuiltinTagger::tag_sentence(const Document &,
                                                const Sentence &sentence) const {
  return tag_tokens(sentence.tokens);
}

std::shared_ptr<const TagProvider> builtin_tagger() {
  static const auto kTagger = std::make_shared<const BuiltinTagger>();
  return kTagger;
}

// ---------------------------------------------------------------------------
// Pre-tagged input.

std::shared_ptr<PretaggedProvider> PretaggedProvider::parse(
    std::string_view text, const std::string &source) {
  if (!unicode::is_valid(text)) throw ParseError(source, 0, "invalid UTF-8");
  auto p = std::make_shared<PretaggedProvider>();
  p->identity_ = "pretagged=" + source;

  std::vector<TaggedSentence> *doc = nullptr;
  TaggedSentence sentence;
  auto flush = [&] {
    if (!sentence.empty()) {
      doc->push_back(std::move(sentence));
      sentence.clear();
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.rfind("# doc:", 0) == 0) {
      if (doc) flush();
      std::string id(line.substr(6));
      id.erase(0, id.find_first_not_of(" \t"));
      id.erase(id.find_last_not_of(" \t") + 1);
      if (id.empty()) throw ParseError(source, line_no, "empty document id");
      if (p->docs_.count(id)) {
        throw ParseError(source, line_no, "duplicate document '" + id + "'");
      }
      doc = &p->docs_[id];
      continue;
    }
    if (line.empty() || line.find_first_not_of(" \t") == std::string_view::npos) {
      if (doc) flush();
      continue;
    }
    if (line.front() == '#') continue;
    if (!doc) throw ParseError(source, line_no, "token before '# doc:' header");

    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw ParseError(source, line_no, "expected 'surface<TAB>tag'");
    }
    std::string_view tag_name = line.substr(tab + 1);
    while (!tag_name.empty() && (tag_name.back() == ' ' || tag_name.back() == '\t')) {
      tag_name.remove_suffix(1);
    }
    PosTag tag = PosTag::kOther;
    if (auto t = parse_pos_tag(tag_name)) {
      tag = *t;
    } else {
      p->warnings_.push_back(source + ":" + std::to_string(line_no) +
                             ": unknown tag '" + std::string(tag_name) +
                             "' mapped to 'other'");
    }
    sentence.push_back({std::string(line.substr(0, tab)), tag});
  }
  if (doc) flush();
  return p;
}

std::shared_ptr<PretaggedProvider> PretaggedProvider::load(
    const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tag file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::vector<PosTag> PretaggedProvider::tag_sentence(
    const Document &doc, const Sentence &sentence) const {
  auto it = docs_.find(doc.id());
  if (it == docs_.end()) {
    throw TaggingError(identity_, "no tags for document '" + doc.id() + "'");
  }
  const auto &sentences = it->second;
  if (sentence.index >= sentences.size()) {
    throw TaggingError(identity_, "document '" + doc.id() + "' has no sentence " +
                                      std::to_string(sentence.index));
  }
  const TaggedSentence &tagged = sentences[sentence.index];
  std::vector<PosTag> tags;
  tags.reserve(tagged.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i >= tagged.size()) {
      throw TaggingError(
          identity_, "document '" + doc.id() + "' sentence " +
                         std::to_string(sentence.index) + ": missing tag at token " +
                         std::to_string(i) + " ('" + sentence.tokens[i].surface +
                         "'), " + std::to_string(tagged.size()) + " tags for " +
                         std::to_string(sentence.tokens.size()) + " tokens");
    }
    if (tagged[i].surface != sentence.tokens[i].surface) {
      throw TaggingError(identity_, "document '" + doc.id() + "' sentence " +
                                        std::to_string(sentence.index) +
                                        ": token " + std::to_string(i) +
                                        " is '" + sentence.tokens[i].surface +
                                        "' but tag file has '" +
                                        tagged[i].surface + "'");
    }
    tags.push_back(tagged[i].tag);
  }
  if (tagged.size() != sentence.tokens.size()) {
    throw TaggingError(identity_,
                       "document '" + doc.id() + "' sentence " +
                           std::to_string(sentence.index) + ": extra tag at token " +
                           std::to_string(sentence.tokens.size()) + ", " +
                           std::to_string(tagged.size()) + " tags for " +
                           std::to_string(sentence.tokens.size()) + " tokens");
  }
  return tags;
}

std::shared_ptr<const TagProvider> pretagged_provider(
    const std::filesystem::path &path) {
  return PretaggedProvider::load(path);
}

}  // namespace pampo
