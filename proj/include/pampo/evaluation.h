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

// Scoring of extractor output against gold annotations.
//
// Two matching modes:
//   occurrence  every mention counts; spans are aligned by offset overlap and
//               a partial overlap earns 1/2.
//   unique      mentions are deduplicated per document by surface; a partial
//               match earns the fraction of the gold entity's content tokens
//               it covers (connectors do not count).
// In both modes an extracted mention credits at most one gold entity and a
// gold entity accumulates at most 1.

#ifndef PAMPO_EVALUATION_H_
#define PAMPO_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pampo {

enum class EntityType { kPer, kLoc, kOrg, kMisc };

const char *to_string(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view name);

inline constexpr EntityType kAllEntityTypes[] = {
    EntityType::kPer, EntityType::kLoc, EntityType::kOrg, EntityType::kMisc};

struct GoldAnnotation {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
  EntityType type = EntityType::kMisc;
};

// Extractor output. Third-party dumps may lack offsets, which restricts
// them to unique mode.
struct Mention {
  std::string doc_id;
  std::string surface;
  std::optional<std::size_t> start;
  std::optional<std::size_t> end;
};

// Exact non-negative rational.
class Credit {
 public:
  constexpr Credit() = default;
  Credit(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Credit &operator+=(const Credit &o);
  Credit &operator-=(const Credit &o);
  friend Credit operator+(Credit a, const Credit &b) { return a += b; }
  friend Credit operator-(Credit a, const Credit &b) { return a -= b; }
  friend bool operator==(const Credit &a, const Credit &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Credit &a, const Credit &b);
  friend bool operator>(const Credit &a, const Credit &b) { return b < a; }
  friend bool operator<=(const Credit &a, const Credit &b) { return !(b < a); }

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct MatchCredit {
  std::size_t extracted = 0;          // index into Matching::extracted
  std::optional<std::size_t> gold;    // index into Matching::gold
  Credit credit;
};

struct Matching {
  std::vector<Mention> extracted;     // after deduplication in unique mode
  std::vector<GoldAnnotation> gold;
  std::vector<MatchCredit> credits;   // one per extracted mention

  Credit total() const;
  // Credit attributed to each gold entity.
  std::vector<Credit> per_gold() const;
};

// Unique-entity matching with fractional partial credit.
Matching match_unique(const std::vector<Mention> &extracted,
                      const std::vector<GoldAnnotation> &gold);

// Occurrence matching with half credit for overlaps. Every extracted mention
// needs offsets; throws MismatchError otherwise.
Matching match_occurrences(const std::vector<Mention> &extracted,
                           const std::vector<GoldAnnotation> &gold);

// Fraction of `gold_surface` identified by `extracted_surface` in unique
// mode: 1 for equal surfaces, a content-token ratio when one token sequence
// contains the other, 0 otherwise.
Credit partial_credit(std::string_view extracted_surface,
                      std::string_view gold_surface);

struct Metrics {
  double recall = 0;
  double precision = 0;
  double f1 = 0;
  double credit = 0;
  std::size_t gold = 0;
  std::size_t extracted = 0;
  bool recall_undefined = false;     // gold == 0
  bool precision_undefined = false;  // extracted == 0
};

Metrics compute_metrics(double credit_sum, std::size_t gold_count,
                        std::size_t extracted_count);
Metrics compute_metrics(const Matching &matching);

enum class EvalMode { kOccurrenceHalf, kUniqueFractional };

const char *to_string(EvalMode mode);

Matching match(EvalMode mode, const std::vector<Mention> &extracted,
               const std::vector<GoldAnnotation> &gold);

struct TypeRecall {
  double recall = 0;
  Credit credit;
  std::size_t gold = 0;
  bool undefined = false;  // no gold of this type
};

// Recall per gold type; extractions are untyped, so precision per type does
// not exist.
std::map<EntityType, TypeRecall> per_type_recall(
    const std::vector<Mention> &extracted,
    const std::vector<GoldAnnotation> &gold,
    EvalMode mode = EvalMode::kUniqueFractional);

std::vector<GoldAnnotation> filter_gold_types(
    const std::vector<GoldAnnotation> &gold,
    const std::set<EntityType> &excluded);

struct DocumentScore {
  std::string doc_id;
  Metrics metrics;
};

struct Summary {
  double mean = 0;
  double sd = 0;  // sample standard deviation
  std::size_t n = 0;
};

Summary summarize(const std::vector<double> &values);

struct EvalReport {
  EvalMode mode = EvalMode::kUniqueFractional;
  Metrics overall;  // pooled over all documents
  std::map<EntityType, TypeRecall> per_type;
  std::vector<DocumentScore> per_document;  // sorted by document id

  Summary recall_summary() const;
  Summary precision_summary() const;
  Summary f1_summary() const;
};

// Scores every document that has gold annotations or extractions.
EvalReport evaluate(const std::vector<Mention> &extracted,
                    const std::vector<GoldAnnotation> &gold, EvalMode mode);

// Per-document differences a - b.
struct DiffStats {
  std::vector<std::pair<std::string, double>> differences;
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  double mean = 0;
  double sd = 0;
};

inline constexpr double kZeroDifference = 1e-12;

// Both maps must hold the same document ids; throws MismatchError otherwise.
DiffStats diff_stats(const std::map<std::string, double> &a,
                     const std::map<std::string, double> &b);

struct ZTest {
  double z = 0;
  double p_value = 0;
};

// Standard normal CDF.
double normal_cdf(double z);

// One-sided test of H1: mean > mu0 under the normal approximation. Throws
// std::invalid_argument when n < 2 or sd is zero (below kZeroDifference).
ZTest ztest_mean_greater(double mean, double sd, std::size_t n, double mu0);
ZTest ztest_mean_greater(const DiffStats &diffs, double mu0);

}  // namespace pampo

#endif  // PAMPO_EVALUATION_H_
