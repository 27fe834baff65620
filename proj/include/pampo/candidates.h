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

// Candidate generation: every sentence is scanned left to right against the
// term patterns; at each position the longest match over all patterns is
// taken and scanning resumes after it.

#ifndef PAMPO_CANDIDATES_H_
#define PAMPO_CANDIDATES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pampo/pattern_bases.h"
#include "pampo/pos.h"
#include "pampo/text.h"

namespace pampo {

struct CandidateEntity {
  std::string doc_id;
  std::size_t sentence_index = 0;
  TokenSpan span;
  std::string surface;  // token surfaces joined by single spaces
  std::size_t start = 0;  // scalar offsets of the first/last token
  std::size_t end = 0;
  std::size_t matched_pattern = 0;  // index into PatternBases::tpb

  friend bool operator==(const CandidateEntity &,
                         const CandidateEntity &) = default;
};

// Evaluates term patterns over a token sequence.
class TermMatcher {
 public:
  explicit TermMatcher(const PatternBases &bases) : bases_(bases) {}

  bool is_trigger(const Token &token) const;
  bool is_connector(const Token &token) const;

  // Exclusive end positions of every match of `pattern` beginning at
  // `start`, before span validity filtering. Sorted ascending.
  std::vector<std::size_t> raw_ends(const TermPattern &pattern,
                                    const std::vector<Token> &tokens,
                                    std::size_t start) const;

  // A span may become a candidate when it neither starts nor ends on a
  // connector and holds at least one capitalized or trigger word.
  bool valid_span(const std::vector<Token> &tokens, std::size_t begin,
                  std::size_t end) const;

  struct Match {
    std::size_t end = 0;  // exclusive
    std::size_t pattern = 0;
  };

  // Longest valid match of any pattern at `start`; ties go to the first
  // pattern in base order.
  std::optional<Match> longest_match(const std::vector<Token> &tokens,
                                     std::size_t start) const;

 private:
  bool element_matches(const PatternNode &node, const Token &token) const;
  std::vector<std::size_t> advance(const PatternNode &node,
                                   const std::vector<Token> &tokens,
                                   const std::vector<std::size_t> &from) const;

  const PatternBases &bases_;
};

std::vector<CandidateEntity> generate_candidates(const Document &doc,
                                                 const PatternBases &bases);

}  // namespace pampo

#endif  // PAMPO_CANDIDATES_H_
