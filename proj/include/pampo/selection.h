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

// Entity selection: candidates are POS tagged, leading non-entity tokens are
// clipped, and candidates matching a pruning pattern or a stop-term are
// dropped.

#ifndef PAMPO_SELECTION_H_
#define PAMPO_SELECTION_H_

#include <string>
#include <vector>

#include "pampo/candidates.h"
#include "pampo/pattern_bases.h"
#include "pampo/pos.h"
#include "pampo/text.h"

namespace pampo {

struct NamedEntity {
  std::string doc_id;
  std::size_t sentence_index = 0;
  TokenSpan span;
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<PosTag> tags;
  CandidateEntity origin;
  // Applied rules, in order: "cpb:<index>" once per clip.
  std::vector<std::string> applied_rules;
};

// Outcome of selection for a single candidate.
struct SelectionTrace {
  std::vector<PosTag> tags;  // tags of the full candidate
  std::size_t clipped = 0;   // leading tokens removed
  std::vector<std::string> applied_rules;
  // Empty when the candidate survives; otherwise "clipped-empty", "ppb:<i>"
  // or "tppb".
  std::string discarded_by;
};

SelectionTrace trace_selection(const CandidateEntity &candidate,
                               const Document &doc, const PatternBases &bases,
                               const TagProvider &provider);

// Candidates must come from `doc`. Survivors keep document order.
std::vector<NamedEntity> select_entities(
    const std::vector<CandidateEntity> &candidates, const Document &doc,
    const PatternBases &bases, const TagProvider &provider);

std::vector<NamedEntity> extract(const Document &doc, const PatternBases &bases,
                                 const TagProvider &provider);

}  // namespace pampo

#endif  // PAMPO_SELECTION_H_
