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

// Document collections, gold annotations and corpus-level reports.

#ifndef PAMPO_CORPUS_H_
#define PAMPO_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pampo/candidates.h"
#include "pampo/evaluation.h"
#include "pampo/selection.h"
#include "pampo/text.h"

namespace pampo {

struct LoadFailure {
  std::string path;
  std::string message;
};

struct Corpus {
  std::vector<Document> documents;  // ordered by id
  std::vector<LoadFailure> failures;
};

// Reads every *.txt file below `dir`; ids are paths relative to `dir` with
// '/' separators. Unreadable or non-UTF-8 files are reported in `failures`
// and skipped. Throws IoError when `dir` is not a directory.
Corpus load_corpus(const std::filesystem::path &dir);

Document load_document(const std::filesystem::path &path, std::string id);

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t min_words = 0;
  std::size_t max_words = 0;
  double mean_words = 0;
  std::size_t entities = 0;
  std::map<EntityType, std::size_t> entities_by_type;
};

// Throws MismatchError when gold refers to documents not in `docs`.
CorpusStats corpus_stats(const std::vector<Document> &docs,
                         const std::vector<GoldAnnotation> &gold);

// Gold document ids absent from `docs`, sorted and unique.
std::vector<std::string> dangling_documents(
    const std::vector<Document> &docs, const std::vector<GoldAnnotation> &gold);

// Gold annotations whose surface differs from the document text at their
// offsets, as human-readable messages.
std::vector<std::string> check_gold_offsets(
    const std::vector<Document> &docs, const std::vector<GoldAnnotation> &gold);

struct FrequencyRow {
  std::string surface;
  std::size_t candidates = 0;
  std::size_t selected = 0;
  bool kept = false;
};

// Candidate surfaces with their selection counts. An entity counts toward
// the surface of the candidate it came from, so clipping never moves counts
// between rows. Rows below `min_count` are dropped; order is candidate count
// descending, then surface.
std::vector<FrequencyRow> frequency_report(
    const std::vector<CandidateEntity> &candidates,
    const std::vector<NamedEntity> &entities, std::size_t min_count);

// JSON-lines interchange. Gold: {doc, start, end, surface, type}.
// Mentions: {doc, surface, start?, end?}; other keys are ignored.
std::vector<GoldAnnotation> read_gold(std::istream &in,
                                      const std::string &source = "<stream>");
std::vector<GoldAnnotation> load_gold(const std::filesystem::path &path);
std::vector<Mention> read_mentions(std::istream &in,
                                   const std::string &source = "<stream>");
std::vector<Mention> load_mentions(const std::filesystem::path &path);

Mention to_mention(const NamedEntity &entity);
std::vector<Mention> to_mentions(const std::vector<NamedEntity> &entities);

// One JSON object (no trailing newline) with doc, surface, start, end and
// sentence.
std::string entity_json(const NamedEntity &entity);
std::string gold_json(const GoldAnnotation &gold);

}  // namespace pampo

#endif  // PAMPO_CORPUS_H_
