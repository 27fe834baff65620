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

#include "pampo/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace pampo {

namespace {

void process(const Document &doc, const PatternBases &bases,
             const TagProvider &provider, DocumentResult &out) {
  try {
    out.candidates = generate_candidates(doc, bases);
    out.entities = select_entities(out.candidates, doc, bases, provider);
  } catch (const std::exception &e) {
    out.candidates.clear();
    out.entities.clear();
    out.error = e.what();
  }
}

}  // namespace

std::vector<DocumentResult> run_pipeline(const std::vector<Document> &docs,
                                         const PatternBases &bases,
                                         const TagProvider &provider,
                                         std::size_t workers) {
  std::vector<DocumentResult> results(docs.size());
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(docs.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      process(docs[i], bases, provider, results[i]);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      process(docs[i], bases, provider, results[i]);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto &t : pool) t.join();
  return results;
}

}  // namespace pampo
