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

#include "pampo/selection.h"

#include <span>
#include <stdexcept>

#include "pampo/error.h"

namespace pampo {
namespace {

const Sentence &sentence_of(const Document &doc, const CandidateEntity &c) {
  if (c.doc_id != doc.id() || c.sentence_index >= doc.sentences().size()) {
    throw std::invalid_argument("candidate '" + c.surface +
                                "' does not belong to document '" + doc.id() +
                                "'");
  }
  return doc.sentences()[c.sentence_index];
}

}  // namespace

namespace {

std::vector<PosTag> tag_span(const TagProvider &provider, const Document &doc,
                             const Sentence &sentence, TokenSpan span,
                             const std::string &surface) {
  try {
    return tag_candidate(provider, doc, sentence, span).tags;
  } catch (const TaggingError &e) {
    throw TaggingError(e.provider(),
                       std::string(e.what()) + " (candidate '" + surface + "')");
  }
}

SelectionTrace apply_rules(const CandidateEntity &candidate,
                           const Sentence &sentence, std::vector<PosTag> tags,
                           const PatternBases &bases) {
  SelectionTrace trace;
  trace.tags = std::move(tags);
  std::span<const PosTag> rest(trace.tags);
  // Clip until no pattern matches; each round removes at least one token.
  bool clipped = true;
  while (clipped && !rest.empty()) {
    clipped = false;
    for (std::size_t i = 0; i < bases.cpb.size(); ++i) {
      const ClippingPattern &cp = bases.cpb[i];
      if (cp.matches_prefix(rest)) {
        rest = rest.subspan(cp.clip_count);
        trace.clipped += cp.clip_count;
        trace.applied_rules.push_back("cpb:" + std::to_string(i));
        clipped = true;
        break;
      }
    }
  }
  if (rest.empty()) {
    trace.discarded_by = "clipped-empty";
    return trace;
  }
  for (std::size_t i = 0; i < bases.ppb.size(); ++i) {
    if (bases.ppb[i].matches(rest)) {
      trace.discarded_by = "ppb:" + std::to_string(i);
      return trace;
    }
  }
  std::size_t first = candidate.span.first + trace.clipped;
  std::string surface =
      join_surfaces(sentence.tokens, first, candidate.span.last + 1);
  if (bases.tppb.contains(surface)) trace.discarded_by = "tppb";
  return trace;
}

}  // namespace

SelectionTrace trace_selection(const CandidateEntity &candidate,
                               const Document &doc, const PatternBases &bases,
                               const TagProvider &provider) {
  const Sentence &sentence = sentence_of(doc, candidate);
  return apply_rules(
      candidate, sentence,
      tag_span(provider, doc, sentence, candidate.span, candidate.surface),
      bases);
}

std::vector<NamedEntity> select_entities(
    const std::vector<CandidateEntity> &candidates, const Document &doc,
    const PatternBases &bases, const TagProvider &provider) {
  std::vector<NamedEntity> out;
  std::size_t tagged_sentence = static_cast<std::size_t>(-1);
  std::vector<PosTag> sentence_tags;
  for (const auto &c : candidates) {
    const Sentence &sentence = sentence_of(doc, c);
    if (c.span.last >= sentence.tokens.size()) {
      throw std::out_of_range("candidate '" + c.surface +
                              "' spans past the end of its sentence");
    }
    if (sentence.index != tagged_sentence) {
      sentence_tags = tag_span(provider, doc, sentence,
                               {0, sentence.tokens.size() - 1}, c.surface);
      tagged_sentence = sentence.index;
    }
    SelectionTrace trace = apply_rules(
        c, sentence,
        {sentence_tags.begin() + static_cast<std::ptrdiff_t>(c.span.first),
         sentence_tags.begin() + static_cast<std::ptrdiff_t>(c.span.last) + 1},
        bases);
    if (!trace.discarded_by.empty()) continue;
    NamedEntity e;
    e.doc_id = c.doc_id;
    e.sentence_index = c.sentence_index;
    e.span = {c.span.first + trace.clipped, c.span.last};
    e.surface = join_surfaces(sentence.tokens, e.span.first, e.span.last + 1);
    e.start = sentence.tokens[e.span.first].start;
    e.end = sentence.tokens[e.span.last].end;
    e.tags.assign(trace.tags.begin() + static_cast<std::ptrdiff_t>(trace.clipped),
                  trace.tags.end());
    e.origin = c;
    e.applied_rules = std::move(trace.applied_rules);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<NamedEntity> extract(const Document &doc, const PatternBases &bases,
                                 const TagProvider &provider) {
  return select_entities(generate_candidates(doc, bases), doc, bases, provider);
}

}  // namespace pampo
