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

#include "pampo/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "pampo/error.h"
#include "pampo/unicode.h"

namespace pampo {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

}  // namespace

Document load_document(const fs::path &path, std::string id) {
  std::string text = read_file(path);
  if (!unicode::is_valid(text)) {
    try {
      unicode::decode(text);
    } catch (const Utf8Error &e) {
      throw Utf8Error(e.byte_offset());
    }
  }
  return Document(std::move(id), std::move(text));
}

Corpus load_corpus(const fs::path &dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::pair<std::string, fs::path>> files;
  for (auto it = fs::recursive_directory_iterator(dir, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (!it->is_regular_file(ec) || it->path().extension() != ".txt") continue;
    files.emplace_back(fs::relative(it->path(), dir).generic_string(),
                       it->path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (auto &[id, path] : files) {
    try {
      corpus.documents.push_back(load_document(path, id));
    } catch (const Error &e) {
      corpus.failures.push_back({path.string(), e.what()});
    }
  }
  return corpus;
}

std::vector<std::string> dangling_documents(
    const std::vector<Document> &docs, const std::vector<GoldAnnotation> &gold) {
  std::set<std::string> ids;
  for (const auto &d : docs) ids.insert(d.id());
  std::set<std::string> out;
  for (const auto &g : gold) {
    if (!ids.count(g.doc_id)) out.insert(g.doc_id);
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> check_gold_offsets(
    const std::vector<Document> &docs, const std::vector<GoldAnnotation> &gold) {
  std::unordered_map<std::string, const Document *> by_id;
  for (const auto &d : docs) by_id[d.id()] = &d;
  std::vector<std::string> out;
  for (const auto &g : gold) {
    auto it = by_id.find(g.doc_id);
    if (it == by_id.end()) continue;
    const Document &doc = *it->second;
    if (g.end > doc.length() || g.start >= g.end) {
      out.push_back(g.doc_id + ": span [" + std::to_string(g.start) + ", " +
                    std::to_string(g.end) + ") outside the text");
      continue;
    }
    std::string text = doc.slice(g.start, g.end);
    if (unicode::collapse(text) != unicode::collapse(g.surface)) {
      out.push_back(g.doc_id + ": span [" + std::to_string(g.start) + ", " +
                    std::to_string(g.end) + ") is '" + text + "', not '" +
                    g.surface + "'");
    }
  }
  return out;
}

CorpusStats corpus_stats(const std::vector<Document> &docs,
                         const std::vector<GoldAnnotation> &gold) {
  auto dangling = dangling_documents(docs, gold);
  if (!dangling.empty()) {
    std::string msg = "gold refers to unknown documents:";
    for (const auto &d : dangling) msg += " " + d;
    throw MismatchError(msg);
  }
  CorpusStats s;
  s.documents = docs.size();
  std::size_t total_words = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::size_t w = docs[i].word_count();
    total_words += w;
    s.min_words = i == 0 ? w : std::min(s.min_words, w);
    s.max_words = std::max(s.max_words, w);
  }
  if (!docs.empty()) {
    s.mean_words = static_cast<double>(total_words) /
                   static_cast<double>(docs.size());
  }
  for (EntityType t : kAllEntityTypes) s.entities_by_type[t] = 0;
  for (const auto &g : gold) ++s.entities_by_type[g.type];
  s.entities = gold.size();
  return s;
}

std::vector<FrequencyRow> frequency_report(
    const std::vector<CandidateEntity> &candidates,
    const std::vector<NamedEntity> &entities, std::size_t min_count) {
  std::map<std::string, FrequencyRow> rows;
  for (const auto &c : candidates) {
    auto &row = rows[c.surface];
    row.surface = c.surface;
    ++row.candidates;
  }
  for (const auto &e : entities) {
    auto it = rows.find(e.origin.surface);
    if (it != rows.end()) ++it->second.selected;
  }
  std::vector<FrequencyRow> out;
  for (auto &[surface, row] : rows) {
    if (row.candidates < min_count) continue;
    row.kept = row.selected > 0;
    out.push_back(row);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FrequencyRow &a, const FrequencyRow &b) {
                     return a.candidates > b.candidates;
                   });
  return out;
}

// ---------------------------------------------------------------------------
// JSON lines.

namespace {

template <typename F>
void for_each_json_line(std::istream &in, const std::string &source, F f) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!obj.is_object()) throw ParseError(source, line_no, "expected an object");
    try {
      f(obj, line_no);
    } catch (const json::exception &e) {
      throw ParseError(source, line_no, e.what());
    }
  }
}

std::string required_string(const json &obj, const char *key,
                            const std::string &source, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(source, line, std::string("missing string '") + key + "'");
  }
  return it->get<std::string>();
}

std::optional<std::size_t> optional_offset(const json &obj, const char *key,
                                           const std::string &source,
                                           std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_unsigned()) {
    throw ParseError(source, line,
                     std::string("'") + key + "' must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

}  // namespace

std::vector<GoldAnnotation> read_gold(std::istream &in,
                                      const std::string &source) {
  std::vector<GoldAnnotation> out;
  for_each_json_line(in, source, [&](const json &obj, std::size_t line) {
    GoldAnnotation g;
    g.doc_id = required_string(obj, "doc", source, line);
    g.surface = required_string(obj, "surface", source, line);
    auto start = optional_offset(obj, "start", source, line);
    auto end = optional_offset(obj, "end", source, line);
    if (!start || !end) throw ParseError(source, line, "gold needs start and end");
    if (*start >= *end) throw ParseError(source, line, "start must be < end");
    g.start = *start;
    g.end = *end;
    std::string type = required_string(obj, "type", source, line);
    auto t = parse_entity_type(type);
    if (!t) throw ParseError(source, line, "unknown entity type '" + type + "'");
    g.type = *t;
    out.push_back(std::move(g));
  });
  return out;
}

std::vector<GoldAnnotation> load_gold(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold file " + path.string());
  return read_gold(in, path.string());
}

std::vector<Mention> read_mentions(std::istream &in, const std::string &source) {
  std::vector<Mention> out;
  for_each_json_line(in, source, [&](const json &obj, std::size_t line) {
    Mention m;
    m.doc_id = required_string(obj, "doc", source, line);
    m.surface = required_string(obj, "surface", source, line);
    m.start = optional_offset(obj, "start", source, line);
    m.end = optional_offset(obj, "end", source, line);
    if (m.start.has_value() != m.end.has_value()) {
      throw ParseError(source, line, "start and end must come together");
    }
    if (m.start && *m.start >= *m.end) {
      throw ParseError(source, line, "start must be < end");
    }
    out.push_back(std::move(m));
  });
  return out;
}

std::vector<Mention> load_mentions(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open extraction file " + path.string());
  return read_mentions(in, path.string());
}

Mention to_mention(const NamedEntity &e) {
  return {e.doc_id, e.surface, e.start, e.end};
}

std::vector<Mention> to_mentions(const std::vector<NamedEntity> &entities) {
  std::vector<Mention> out;
  out.reserve(entities.size());
  for (const auto &e : entities) out.push_back(to_mention(e));
  return out;
}

std::string entity_json(const NamedEntity &e) {
  json obj = json::object();
  obj["doc"] = e.doc_id;
  obj["surface"] = e.surface;
  obj["start"] = e.start;
  obj["end"] = e.end;
  obj["sentence"] = e.sentence_index;
  return obj.dump();
}

std::string gold_json(const GoldAnnotation &g) {
  json obj = json::object();
  obj["doc"] = g.doc_id;
  obj["start"] = g.start;
  obj["end"] = g.end;
  obj["surface"] = g.surface;
  obj["type"] = to_string(g.type);
  return obj.dump();
}

}  // namespace pampo
