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

// Both phases over a document collection, optionally on several threads.

#ifndef PAMPO_PIPELINE_H_
#define PAMPO_PIPELINE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "pampo/candidates.h"
#include "pampo/pattern_bases.h"
#include "pampo/pos.h"
#include "pampo/selection.h"
#include "pampo/text.h"

namespace pampo {

struct DocumentResult {
  std::vector<CandidateEntity> candidates;
  std::vector<NamedEntity> entities;
  std::string error;  // non-empty when the document failed
};

// results[i] belongs to docs[i] whatever the worker count. A failing document
// records its error and leaves the others untouched.
std::vector<DocumentResult> run_pipeline(const std::vector<Document> &docs,
                                         const PatternBases &bases,
                                         const TagProvider &provider,
                                         std::size_t workers = 1);

}  // namespace pampo

#endif  // PAMPO_PIPELINE_H_
