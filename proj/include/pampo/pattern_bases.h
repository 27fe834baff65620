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

// The four rule bases driving extraction:
//   TPB   term patterns over tokens (candidate generation)
//   CPB   POS-tag prefixes clipped from candidates
//   PPB   POS-tag predicates that discard candidates
//   TPPB  literal stop-terms that discard candidates
//
// Pattern-base files are line oriented:
//
//   # comment
//   [tpb]
//   TRIGGER? CONNECTOR? CAP (CONNECTOR{1,2} CAP | CAP)*
//   [triggers]
//   ministro
//   [connectors]
//   de
//   [cpb]
//   adv prop : 1
//   [ppb]
//   lacks prop n
//   [tppb]
//   Hoje
//
// Sections that are absent fall back to the shipped defaults.

#ifndef PAMPO_PATTERN_BASES_H_
#define PAMPO_PATTERN_BASES_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pampo/pos_tag.h"

namespace pampo {

// Node of a term-pattern expression.
struct PatternNode {
  enum class Kind {
    kCap,        // word whose first letter is uppercase
    kTrigger,    // lowercase-initial word in the trigger lexicon
    kConnector,  // member of the connector set
    kLiteral,    // word equal (case-insensitively) to `literal`
    kSequence,
    kAlternation,
    kRepeat,     // children[0] repeated min..max times
  };
  static constexpr int kUnbounded = -1;

  Kind kind = Kind::kSequence;
  std::string literal;
  std::vector<PatternNode> children;
  int min = 1;
  int max = 1;

  bool is_element() const {
    return kind == Kind::kCap || kind == Kind::kTrigger ||
           kind == Kind::kConnector || kind == Kind::kLiteral;
  }

  friend bool operator==(const PatternNode &, const PatternNode &) = default;
};

class TermPattern {
 public:
  // Throws std::invalid_argument with a description on syntax errors.
  static TermPattern parse(std::string_view source);

  const PatternNode &root() const { return root_; }
  std::string to_string() const;

  friend bool operator==(const TermPattern &a, const TermPattern &b) {
    return a.root_ == b.root_;
  }

 private:
  PatternNode root_;
};

// Ordered set of case-folded terms. Insertion order is kept for
// serialization; membership uses fold_key().
class TermSet {
 public:
  TermSet() = default;
  TermSet(std::initializer_list<std::string_view> terms);

  // Returns false when an equivalent term is already present.
  bool add(std::string_view term);
  bool contains(std::string_view term) const;

  const std::vector<std::string> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const TermSet &a, const TermSet &b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_set<std::string> keys_;
};

struct ClippingPattern {
  std::vector<PosTag> tags;
  std::size_t clip_count = 1;

  bool matches_prefix(std::span<const PosTag> sequence) const;

  friend bool operator==(const ClippingPattern &,
                         const ClippingPattern &) = default;
};

struct PruningPattern {
  enum class Kind {
    kLacks,     // no tag of `tags` occurs in the sequence
    kOnly,      // every tag of the sequence is in `tags`
    kSequence,  // the sequence equals `tags`
  };
  Kind kind = Kind::kLacks;
  std::vector<PosTag> tags;

  bool matches(std::span<const PosTag> sequence) const;
  std::string to_string() const;

  friend bool operator==(const PruningPattern &,
                         const PruningPattern &) = default;
};

struct PatternBases {
  std::vector<TermPattern> tpb;
  TermSet triggers;
  TermSet connectors;
  std::vector<ClippingPattern> cpb;
  std::vector<PruningPattern> ppb;
  TermSet tppb;

  friend bool operator==(const PatternBases &, const PatternBases &) = default;
};

// Bases shipped with the library.
const PatternBases &default_bases();

// The shipped bases in pattern-file syntax.
const std::string &default_bases_text();

PatternBases parse_pattern_bases(std::string_view text,
                                 const std::string &source = "<string>");
PatternBases load_pattern_bases(const std::filesystem::path &path);

std::string serialize(const PatternBases &bases);

// Reference lists shipped in the default bases.
std::span<const std::string_view> title_triggers();
std::span<const std::string_view> pruning_terms();
std::span<const std::string_view> portuguese_stopwords();

}  // namespace pampo

#endif  // PAMPO_PATTERN_BASES_H_
