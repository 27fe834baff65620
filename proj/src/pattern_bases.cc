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

#include "pampo/pattern_bases.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pampo/error.h"
#include "pampo/unicode.h"

namespace pampo {

// ---------------------------------------------------------------------------
// Term pattern syntax.

namespace {

using Kind = PatternNode::Kind;

PatternNode element(Kind kind, std::string literal = {}) {
  PatternNode n;
  n.kind = kind;
  n.literal = std::move(literal);
  return n;
}

bool is_special(char c) {
  return c == '(' || c == ')' || c == '|' || c == '?' || c == '*' ||
         c == '+' || c == '{' || c == '}' || c == '"';
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

class PatternParser {
 public:
  explicit PatternParser(std::string_view src) : src_(src) {}

  PatternNode parse() {
    skip();
    if (pos_ == src_.size()) fail("empty pattern");
    PatternNode node = alternation();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw std::invalid_argument(msg + " at column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < src_.size() && is_blank(src_[pos_])) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  PatternNode alternation() {
    PatternNode first = sequence();
    if (!peek('|')) return first;
    PatternNode alt{Kind::kAlternation, {}, {std::move(first)}};
    while (peek('|')) {
      ++pos_;
      alt.children.push_back(sequence());
    }
    return alt;
  }

  PatternNode sequence() {
    PatternNode seq;
    seq.kind = Kind::kSequence;
    while (true) {
      skip();
      if (pos_ == src_.size() || src_[pos_] == ')' || src_[pos_] == '|') break;
      seq.children.push_back(item());
    }
    if (seq.children.empty()) fail("empty sequence");
    if (seq.children.size() == 1) return std::move(seq.children.front());
    return seq;
  }

  PatternNode item() {
    PatternNode node = atom();
    while (true) {
      skip();
      if (pos_ == src_.size()) break;
      char c = src_[pos_];
      int min, max;
      if (c == '?') {
        min = 0, max = 1;
        ++pos_;
      } else if (c == '*') {
        min = 0, max = PatternNode::kUnbounded;
        ++pos_;
      } else if (c == '+') {
        min = 1, max = PatternNode::kUnbounded;
        ++pos_;
      } else if (c == '{') {
        std::tie(min, max) = bounds();
      } else {
        break;
      }
      node = PatternNode{Kind::kRepeat, {}, {std::move(node)}, min, max};
    }
    return node;
  }

  std::pair<int, int> bounds() {
    ++pos_;  // '{'
    auto close = src_.find('}', pos_);
    if (close == std::string_view::npos) fail("unterminated '{'");
    std::string_view body = src_.substr(pos_, close - pos_);
    auto number = [&](std::string_view s) {
      int v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        fail("bad repetition bound '" + std::string(s) + "'");
      }
      return v;
    };
    int min, max;
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      min = max = number(body);
    } else {
      min = number(body.substr(0, comma));
      std::string_view rest = body.substr(comma + 1);
      max = rest.empty() ? PatternNode::kUnbounded : number(rest);
    }
    if (max != PatternNode::kUnbounded && (max < min || max == 0)) {
      fail("bad repetition bounds");
    }
    pos_ = close + 1;
    return {min, max};
  }

  PatternNode atom() {
    skip();
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      PatternNode inner = alternation();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '"') {
      auto close = src_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated literal");
      std::string text(src_.substr(pos_ + 1, close - pos_ - 1));
      if (text.empty()) fail("empty literal");
      pos_ = close + 1;
      return element(Kind::kLiteral, std::move(text));
    }
    if (is_special(c)) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t b = pos_;
    while (pos_ < src_.size() && !is_blank(src_[pos_]) && !is_special(src_[pos_])) {
      ++pos_;
    }
    std::string_view word = src_.substr(b, pos_ - b);
    if (word == "CAP") return element(Kind::kCap);
    if (word == "TRIGGER") return element(Kind::kTrigger);
    if (word == "CONNECTOR") return element(Kind::kConnector);
    return element(Kind::kLiteral, std::string(word));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool has_anchor(const PatternNode &node) {
  if (node.kind == Kind::kCap || node.kind == Kind::kTrigger) return true;
  return std::any_of(node.children.begin(), node.children.end(), has_anchor);
}

bool needs_quotes(const std::string &literal) {
  if (literal == "CAP" || literal == "TRIGGER" || literal == "CONNECTOR") {
    return true;
  }
  return std::any_of(literal.begin(), literal.end(),
                     [](char c) { return is_special(c) || is_blank(c); });
}

void print(const PatternNode &node, std::string &out, bool grouped) {
  switch (node.kind) {
    case Kind::kCap: out += "CAP"; return;
    case Kind::kTrigger: out += "TRIGGER"; return;
    case Kind::kConnector: out += "CONNECTOR"; return;
    case Kind::kLiteral:
      out += needs_quotes(node.literal) ? '"' + node.literal + '"'
                                        : node.literal;
      return;
    case Kind::kSequence:
      if (grouped) out += '(';
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out += ' ';
        print(node.children[i], out, node.children[i].kind == Kind::kAlternation);
      }
      if (grouped) out += ')';
      return;
    case Kind::kAlternation:
      if (grouped) out += '(';
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out += " | ";
        print(node.children[i], out, node.children[i].kind == Kind::kAlternation);
      }
      if (grouped) out += ')';
      return;
    case Kind::kRepeat: {
      const PatternNode &child = node.children.front();
      print(child, out, !child.is_element());
      if (node.min == 0 && node.max == 1) {
        out += '?';
      } else if (node.min == 0 && node.max == PatternNode::kUnbounded) {
        out += '*';
      } else if (node.min == 1 && node.max == PatternNode::kUnbounded) {
        out += '+';
      } else if (node.max == PatternNode::kUnbounded) {
        out += '{' + std::to_string(node.min) + ",}";
      } else if (node.min == node.max) {
        out += '{' + std::to_string(node.min) + '}';
      } else {
        out += '{' + std::to_string(node.min) + ',' + std::to_string(node.max) + '}';
      }
      return;
    }
  }
}

}  // namespace

TermPattern TermPattern::parse(std::string_view source) {
  TermPattern p;
  p.root_ = PatternParser(source).parse();
  if (!has_anchor(p.root_)) {
    throw std::invalid_argument("pattern needs at least one CAP or TRIGGER");
  }
  return p;
}

std::string TermPattern::to_string() const {
  std::string out;
  print(root_, out, false);
  return out;
}

// ---------------------------------------------------------------------------
// Term sets and tag patterns.

TermSet::TermSet(std::initializer_list<std::string_view> terms) {
  for (auto t : terms) add(t);
}

bool TermSet::add(std::string_view term) {
  std::string key = unicode::fold_key(term);
  if (key.empty() || !keys_.insert(key).second) return false;
  std::string clean = unicode::collapse(term);
  terms_.push_back(std::move(clean));
  return true;
}

bool TermSet::contains(std::string_view term) const {
  return keys_.count(unicode::fold_key(term)) > 0;
}

bool ClippingPattern::matches_prefix(std::span<const PosTag> sequence) const {
  if (tags.empty() || sequence.size() < tags.size()) return false;
  return std::equal(tags.begin(), tags.end(), sequence.begin());
}

bool PruningPattern::matches(std::span<const PosTag> sequence) const {
  auto in_tags = [this](PosTag t) {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
  };
  switch (kind) {
    case Kind::kLacks:
      return std::none_of(sequence.begin(), sequence.end(), in_tags);
    case Kind::kOnly:
      return std::all_of(sequence.begin(), sequence.end(), in_tags);
    case Kind::kSequence:
      return std::equal(tags.begin(), tags.end(), sequence.begin(),
                        sequence.end());
  }
  return false;
}

std::string PruningPattern::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::kLacks: out = "lacks"; break;
    case Kind::kOnly: out = "only"; break;
    case Kind::kSequence: out = "seq"; break;
  }
  for (PosTag t : tags) {
    out += ' ';
    out += pampo::to_string(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pattern-base files.

namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_blank(s[i])) ++i;
    std::size_t b = i;
    while (i < s.size() && !is_blank(s[i])) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

enum class Section { kNone, kTpb, kTriggers, kConnectors, kCpb, kPpb, kTppb };

Section section_named(std::string_view name) {
  if (name == "tpb") return Section::kTpb;
  if (name == "triggers") return Section::kTriggers;
  if (name == "connectors") return Section::kConnectors;
  if (name == "cpb") return Section::kCpb;
  if (name == "ppb") return Section::kPpb;
  if (name == "tppb") return Section::kTppb;
  return Section::kNone;
}

}  // namespace

PatternBases parse_pattern_bases(std::string_view text,
                                 const std::string &source) {
  if (!unicode::is_valid(text)) throw ParseError(source, 0, "invalid UTF-8");

  PatternBases bases;
  bool seen[7] = {};
  std::size_t header_line[7] = {};
  Section current = Section::kNone;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto tags_of = [&](const std::vector<std::string_view> &words,
                     std::size_t from, std::size_t to) {
    std::vector<PosTag> tags;
    for (std::size_t i = from; i < to; ++i) {
      auto tag = parse_pos_tag(words[i]);
      if (!tag) {
        throw ParseError(source, line_no,
                         "unknown POS tag '" + std::string(words[i]) + "'");
      }
      tags.push_back(*tag);
    }
    return tags;
  };

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(source, line_no, "malformed section header");
      }
      std::string_view name = trim(line.substr(1, line.size() - 2));
      current = section_named(name);
      if (current == Section::kNone) {
        throw ParseError(source, line_no,
                         "unknown section '" + std::string(name) + "'");
      }
      if (seen[static_cast<int>(current)]) {
        throw ParseError(source, line_no,
                         "duplicate section '" + std::string(name) + "'");
      }
      seen[static_cast<int>(current)] = true;
      header_line[static_cast<int>(current)] = line_no;
      continue;
    }

    switch (current) {
      case Section::kNone:
        throw ParseError(source, line_no, "entry outside of any section");
      case Section::kTpb:
        try {
          bases.tpb.push_back(TermPattern::parse(line));
        } catch (const std::invalid_argument &e) {
          throw ParseError(source, line_no, e.what());
        }
        break;
      case Section::kTriggers:
        bases.triggers.add(unicode::to_lower(line));
        break;
      case Section::kConnectors:
        bases.connectors.add(line);
        break;
      case Section::kCpb: {
        auto colon = line.rfind(':');
        if (colon == std::string_view::npos) {
          throw ParseError(source, line_no, "clipping pattern needs ': count'");
        }
        auto words = split_words(line.substr(0, colon));
        if (words.empty()) {
          throw ParseError(source, line_no, "clipping pattern has no tags");
        }
        std::string_view count_text = trim(line.substr(colon + 1));
        std::size_t count = 0;
        auto [p, ec] = std::from_chars(
            count_text.data(), count_text.data() + count_text.size(), count);
        if (ec != std::errc() || p != count_text.data() + count_text.size()) {
          throw ParseError(source, line_no,
                           "bad clip count '" + std::string(count_text) + "'");
        }
        ClippingPattern cp{tags_of(words, 0, words.size()), count};
        if (count < 1 || count > cp.tags.size()) {
          throw ParseError(source, line_no,
                           "clip count must be between 1 and the number of tags");
        }
        bases.cpb.push_back(std::move(cp));
        break;
      }
      case Section::kPpb: {
        auto words = split_words(line);
        PruningPattern pp;
        if (words[0] == "lacks") {
          pp.kind = PruningPattern::Kind::kLacks;
        } else if (words[0] == "only") {
          pp.kind = PruningPattern::Kind::kOnly;
        } else if (words[0] == "seq") {
          pp.kind = PruningPattern::Kind::kSequence;
        } else {
          throw ParseError(source, line_no,
                           "pruning pattern must start with lacks, only or seq");
        }
        if (words.size() < 2) {
          throw ParseError(source, line_no, "pruning pattern has no tags");
        }
        pp.tags = tags_of(words, 1, words.size());
        bases.ppb.push_back(std::move(pp));
        break;
      }
      case Section::kTppb:
        bases.tppb.add(line);
        break;
    }
  }

  if (seen[static_cast<int>(Section::kTpb)] && bases.tpb.empty()) {
    throw ParseError(source, header_line[static_cast<int>(Section::kTpb)],
                     "empty [tpb] section");
  }
  if (seen[static_cast<int>(Section::kTriggers)] && bases.triggers.empty()) {
    throw ParseError(source, header_line[static_cast<int>(Section::kTriggers)],
                     "empty [triggers] section");
  }

  const PatternBases &defaults = default_bases();
  if (!seen[static_cast<int>(Section::kTpb)]) bases.tpb = defaults.tpb;
  if (!seen[static_cast<int>(Section::kTriggers)]) bases.triggers = defaults.triggers;
  if (!seen[static_cast<int>(Section::kConnectors)]) bases.connectors = defaults.connectors;
  if (!seen[static_cast<int>(Section::kCpb)]) bases.cpb = defaults.cpb;
  if (!seen[static_cast<int>(Section::kPpb)]) bases.ppb = defaults.ppb;
  if (!seen[static_cast<int>(Section::kTppb)]) bases.tppb = defaults.tppb;
  return bases;
}

PatternBases load_pattern_bases(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pattern file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern_bases(buf.str(), path.string());
}

std::string serialize(const PatternBases &bases) {
  std::string out;
  out += "[tpb]\n";
  for (const auto &p : bases.tpb) out += p.to_string() + '\n';
  out += "\n[triggers]\n";
  for (const auto &t : bases.triggers.terms()) out += t + '\n';
  out += "\n[connectors]\n";
  for (const auto &t : bases.connectors.terms()) out += t + '\n';
  out += "\n[cpb]\n";
  for (const auto &cp : bases.cpb) {
    for (PosTag t : cp.tags) {
      out += to_string(t);
      out += ' ';
    }
    out += ": " + std::to_string(cp.clip_count) + '\n';
  }
  out += "\n[ppb]\n";
  for (const auto &pp : bases.ppb) out += pp.to_string() + '\n';
  out += "\n[tppb]\n";
  for (const auto &t : bases.tppb.terms()) out += t + '\n';
  return out;
}

}  // namespace pampo
