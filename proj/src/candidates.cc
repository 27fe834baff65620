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

#include "pampo/candidates.h"

#include <algorithm>
#include <set>

#include "pampo/unicode.h"

namespace pampo {

using Kind = PatternNode::Kind;

bool TermMatcher::is_trigger(const Token &token) const {
  return is_lowercase_initial(token) && bases_.triggers.contains(token.surface);
}

bool TermMatcher::is_connector(const Token &token) const {
  return is_lowercase_initial(token) &&
         bases_.connectors.contains(token.surface);
}

bool TermMatcher::element_matches(const PatternNode &node,
                                  const Token &token) const {
  switch (node.kind) {
    case Kind::kCap: return is_capitalized(token);
    case Kind::kTrigger: return is_trigger(token);
    case Kind::kConnector: return is_connector(token);
    case Kind::kLiteral:
      return unicode::fold_key(token.surface) == unicode::fold_key(node.literal);
    default: return false;
  }
}

std::vector<std::size_t> TermMatcher::advance(
    const PatternNode &node, const std::vector<Token> &tokens,
    const std::vector<std::size_t> &from) const {
  std::vector<std::size_t> out;
  switch (node.kind) {
    case Kind::kCap:
    case Kind::kTrigger:
    case Kind::kConnector:
    case Kind::kLiteral:
      for (std::size_t p : from) {
        if (p < tokens.size() && element_matches(node, tokens[p])) {
          out.push_back(p + 1);
        }
      }
      return out;
    case Kind::kSequence: {
      std::vector<std::size_t> cur = from;
      for (const auto &child : node.children) {
        if (cur.empty()) break;
        cur = advance(child, tokens, cur);
      }
      return cur;
    }
    case Kind::kAlternation: {
      std::set<std::size_t> acc;
      for (const auto &child : node.children) {
        auto ends = advance(child, tokens, from);
        acc.insert(ends.begin(), ends.end());
      }
      return {acc.begin(), acc.end()};
    }
    case Kind::kRepeat: {
      std::set<std::size_t> acc;
      std::set<std::size_t> seen;
      if (node.min == 0) acc.insert(from.begin(), from.end());
      std::vector<std::size_t> cur = from;
      for (int k = 1; node.max == PatternNode::kUnbounded || k <= node.max; ++k) {
        cur = advance(node.children.front(), tokens, cur);
        if (k >= node.min) {
          // Past the minimum, positions reached before add nothing new.
          std::erase_if(cur, [&](std::size_t p) { return seen.count(p) > 0; });
          acc.insert(cur.begin(), cur.end());
          seen.insert(cur.begin(), cur.end());
        }
        if (cur.empty()) break;
      }
      return {acc.begin(), acc.end()};
    }
  }
  return out;
}

std::vector<std::size_t> TermMatcher::raw_ends(const TermPattern &pattern,
                                               const std::vector<Token> &tokens,
                                               std::size_t start) const {
  return advance(pattern.root(), tokens, {start});
}

bool TermMatcher::valid_span(const std::vector<Token> &tokens,
                             std::size_t begin, std::size_t end) const {
  if (end <= begin || end > tokens.size()) return false;
  if (is_connector(tokens[begin]) || is_connector(tokens[end - 1])) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (is_capitalized(tokens[i]) || is_trigger(tokens[i])) return true;
  }
  return false;
}

std::optional<TermMatcher::Match> TermMatcher::longest_match(
    const std::vector<Token> &tokens, std::size_t start) const {
  std::optional<Match> best;
  for (std::size_t p = 0; p < bases_.tpb.size(); ++p) {
    auto ends = raw_ends(bases_.tpb[p], tokens, start);
    for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
      if (!valid_span(tokens, start, *it)) continue;
      if (!best || *it > best->end) best = Match{*it, p};
      break;
    }
  }
  return best;
}

std::vector<CandidateEntity> generate_candidates(const Document &doc,
                                                 const PatternBases &bases) {
  TermMatcher matcher(bases);
  std::vector<CandidateEntity> out;
  for (const Sentence &sentence : doc.sentences()) {
    const auto &tokens = sentence.tokens;
    std::size_t i = 0;
    while (i < tokens.size()) {
      auto match = matcher.longest_match(tokens, i);
      if (!match) {
        ++i;
        continue;
      }
      CandidateEntity c;
      c.doc_id = doc.id();
      c.sentence_index = sentence.index;
      c.span = {i, match->end - 1};
      c.surface = join_surfaces(tokens, i, match->end);
      c.start = tokens[i].start;
      c.end = tokens[match->end - 1].end;
      c.matched_pattern = match->pattern;
      out.push_back(std::move(c));
      i = match->end;
    }
  }
  return out;
}

}  // namespace pampo
