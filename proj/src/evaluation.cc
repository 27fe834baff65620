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

#include "pampo/evaluation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "pampo/error.h"
#include "pampo/pattern_bases.h"
#include "pampo/text.h"
#include "pampo/unicode.h"

namespace pampo {

const char *to_string(EntityType type) {
  switch (type) {
    case EntityType::kPer: return "PER";
    case EntityType::kLoc: return "LOC";
    case EntityType::kOrg: return "ORG";
    case EntityType::kMisc: return "MISC";
  }
  return "MISC";
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  for (EntityType t : kAllEntityTypes) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

const char *to_string(EvalMode mode) {
  return mode == EvalMode::kOccurrenceHalf ? "occurrence" : "unique";
}

// ---------------------------------------------------------------------------
// Credit arithmetic.

Credit::Credit(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("credit must be >= 0");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Credit &Credit::operator+=(const Credit &o) {
  *this = Credit(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Credit &Credit::operator-=(const Credit &o) {
  *this = Credit(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

bool operator<(const Credit &a, const Credit &b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Credit::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Credit Matching::total() const {
  Credit sum;
  for (const auto &c : credits) sum += c.credit;
  return sum;
}

std::vector<Credit> Matching::per_gold() const {
  std::vector<Credit> out(gold.size());
  for (const auto &c : credits) {
    if (c.gold) out[*c.gold] += c.credit;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching.

namespace {

bool is_content(const Token &t) {
  static const TermSet kConnectors = {"de", "da", "do", "das", "dos", "e"};
  if (t.kind == TokenKind::kPunctuation) return false;
  return !(is_lowercase_initial(t) && kConnectors.contains(t.surface));
}

struct Shape {
  std::vector<std::string> surfaces;
  std::vector<bool> content;
  std::int64_t content_count = 0;
};

Shape shape_of(std::string_view surface) {
  Shape s;
  for (const Token &t : tokenize(unicode::nfc(surface))) {
    s.surfaces.push_back(t.surface);
    bool c = is_content(t);
    s.content.push_back(c);
    s.content_count += c;
  }
  return s;
}

// Position where `inner` occurs contiguously inside `outer`, if any.
bool contains_run(const Shape &outer, const Shape &inner) {
  if (inner.surfaces.empty() || inner.surfaces.size() > outer.surfaces.size()) {
    return false;
  }
  return std::search(outer.surfaces.begin(), outer.surfaces.end(),
                     inner.surfaces.begin(),
                     inner.surfaces.end()) != outer.surfaces.end();
}

Credit shape_credit(const Shape &extracted, const Shape &gold) {
  if (extracted.content_count == 0 || gold.content_count == 0) return {};
  if (contains_run(gold, extracted)) {
    return Credit(extracted.content_count, gold.content_count);
  }
  if (contains_run(extracted, gold)) {
    return Credit(gold.content_count, extracted.content_count);
  }
  return {};
}

struct Pair {
  std::size_t extracted;
  std::size_t gold;
  Credit credit;
};

// Greedy assignment: highest effective credit first, ties in list order. An
// extracted item is used once; a gold entity absorbs at most 1 in total, and
// a pair's effective credit shrinks as its gold fills up.
std::vector<MatchCredit> assign(std::vector<Pair> pairs, std::size_t n_extracted,
                                std::size_t n_gold) {
  auto after = [](const Pair &a, const Pair &b) {
    if (!(a.credit == b.credit)) return a.credit < b.credit;
    if (a.extracted != b.extracted) return a.extracted > b.extracted;
    return a.gold > b.gold;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(after)> queue(
      after, std::move(pairs));
  std::vector<MatchCredit> out(n_extracted);
  for (std::size_t i = 0; i < n_extracted; ++i) out[i].extracted = i;
  std::vector<bool> used(n_extracted, false);
  std::vector<Credit> remaining(n_gold, Credit(1, 1));
  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    if (used[p.extracted] || remaining[p.gold] == Credit()) continue;
    if (remaining[p.gold] < p.credit) {
      p.credit = remaining[p.gold];
      queue.push(p);
      continue;
    }
    remaining[p.gold] -= p.credit;
    used[p.extracted] = true;
    out[p.extracted].gold = p.gold;
    out[p.extracted].credit = p.credit;
  }
  return out;
}

template <typename T>
std::unordered_map<std::string, std::vector<std::size_t>> by_doc(
    const std::vector<T> &items) {
  std::unordered_map<std::string, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out[items[i].doc_id].push_back(i);
  }
  return out;
}

}  // namespace

Credit partial_credit(std::string_view extracted_surface,
                      std::string_view gold_surface) {
  if (unicode::collapse(extracted_surface) == unicode::collapse(gold_surface)) {
    return Credit(1, 1);
  }
  return shape_credit(shape_of(extracted_surface), shape_of(gold_surface));
}

Matching match_unique(const std::vector<Mention> &extracted,
                      const std::vector<GoldAnnotation> &gold) {
  Matching m;
  std::vector<std::string> e_keys, g_keys;
  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto &e : extracted) {
      std::string key = unicode::collapse(e.surface);
      if (key.empty() || !seen.insert({e.doc_id, key}).second) continue;
      m.extracted.push_back(e);
      e_keys.push_back(std::move(key));
    }
  }
  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto &g : gold) {
      std::string key = unicode::collapse(g.surface);
      if (key.empty() || !seen.insert({g.doc_id, key}).second) continue;
      m.gold.push_back(g);
      g_keys.push_back(std::move(key));
    }
  }

  std::vector<Shape> e_shapes, g_shapes;
  for (const auto &k : e_keys) e_shapes.push_back(shape_of(k));
  for (const auto &k : g_keys) g_shapes.push_back(shape_of(k));

  auto gold_by_doc = by_doc(m.gold);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m.extracted.size(); ++i) {
    auto it = gold_by_doc.find(m.extracted[i].doc_id);
    if (it == gold_by_doc.end()) continue;
    for (std::size_t j : it->second) {
      Credit c = e_keys[i] == g_keys[j] ? Credit(1, 1)
                                        : shape_credit(e_shapes[i], g_shapes[j]);
      if (c > Credit()) pairs.push_back({i, j, c});
    }
  }
  m.credits = assign(std::move(pairs), m.extracted.size(), m.gold.size());
  return m;
}

Matching match_occurrences(const std::vector<Mention> &extracted,
                           const std::vector<GoldAnnotation> &gold) {
  Matching m;
  m.extracted = extracted;
  m.gold = gold;
  for (const auto &e : extracted) {
    if (!e.start || !e.end) {
      throw MismatchError("occurrence matching needs offsets; mention '" +
                          e.surface + "' in document '" + e.doc_id +
                          "' has none");
    }
  }
  auto gold_by_doc = by_doc(m.gold);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m.extracted.size(); ++i) {
    const Mention &e = m.extracted[i];
    auto it = gold_by_doc.find(e.doc_id);
    if (it == gold_by_doc.end()) continue;
    for (std::size_t j : it->second) {
      const GoldAnnotation &g = m.gold[j];
      if (*e.start >= g.end || g.start >= *e.end) continue;
      bool exact = *e.start == g.start && *e.end == g.end &&
                   unicode::collapse(e.surface) == unicode::collapse(g.surface);
      pairs.push_back({i, j, exact ? Credit(1, 1) : Credit(1, 2)});
    }
  }
  m.credits = assign(std::move(pairs), m.extracted.size(), m.gold.size());
  return m;
}

Matching match(EvalMode mode, const std::vector<Mention> &extracted,
               const std::vector<GoldAnnotation> &gold) {
  return mode == EvalMode::kOccurrenceHalf ? match_occurrences(extracted, gold)
                                           : match_unique(extracted, gold);
}

// ---------------------------------------------------------------------------
// Metrics.

Metrics compute_metrics(double credit_sum, std::size_t gold_count,
                        std::size_t extracted_count) {
  Metrics m;
  m.credit = credit_sum;
  m.gold = gold_count;
  m.extracted = extracted_count;
  m.recall_undefined = gold_count == 0;
  m.precision_undefined = extracted_count == 0;
  if (gold_count) m.recall = credit_sum / static_cast<double>(gold_count);
  if (extracted_count) {
    m.precision = credit_sum / static_cast<double>(extracted_count);
  }
  if (m.recall + m.precision > 0) {
    m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

Metrics compute_metrics(const Matching &matching) {
  return compute_metrics(matching.total().value(), matching.gold.size(),
                         matching.extracted.size());
}

std::map<EntityType, TypeRecall> per_type_recall(
    const std::vector<Mention> &extracted,
    const std::vector<GoldAnnotation> &gold, EvalMode mode) {
  std::map<EntityType, TypeRecall> out;
  for (EntityType type : kAllEntityTypes) {
    std::vector<GoldAnnotation> typed;
    for (const auto &g : gold) {
      if (g.type == type) typed.push_back(g);
    }
    Matching m = match(mode, extracted, typed);
    TypeRecall r;
    r.credit = m.total();
    r.gold = m.gold.size();
    r.undefined = r.gold == 0;
    if (r.gold) r.recall = r.credit.value() / static_cast<double>(r.gold);
    out[type] = r;
  }
  return out;
}

std::vector<GoldAnnotation> filter_gold_types(
    const std::vector<GoldAnnotation> &gold,
    const std::set<EntityType> &excluded) {
  std::vector<GoldAnnotation> out;
  std::copy_if(gold.begin(), gold.end(), std::back_inserter(out),
               [&](const GoldAnnotation &g) { return !excluded.count(g.type); });
  return out;
}

Summary summarize(const std::vector<double> &values) {
  Summary s;
  s.n = values.size();
  if (values.empty()) return s;
  double sum = std::accumulate(values.begin(), values.end(), 0.0);
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

namespace {

template <typename F>
Summary summarize_docs(const std::vector<DocumentScore> &docs, F field) {
  std::vector<double> values;
  for (const auto &d : docs) values.push_back(field(d.metrics));
  return summarize(values);
}

}  // namespace

Summary EvalReport::recall_summary() const {
  return summarize_docs(per_document, [](const Metrics &m) { return m.recall; });
}
Summary EvalReport::precision_summary() const {
  return summarize_docs(per_document,
                        [](const Metrics &m) { return m.precision; });
}
Summary EvalReport::f1_summary() const {
  return summarize_docs(per_document, [](const Metrics &m) { return m.f1; });
}

EvalReport evaluate(const std::vector<Mention> &extracted,
                    const std::vector<GoldAnnotation> &gold, EvalMode mode) {
  EvalReport report;
  report.mode = mode;

  std::map<std::string, std::pair<std::vector<Mention>,
                                  std::vector<GoldAnnotation>>> docs;
  for (const auto &e : extracted) docs[e.doc_id].first.push_back(e);
  for (const auto &g : gold) docs[g.doc_id].second.push_back(g);

  Credit total;
  std::size_t gold_count = 0;
  std::size_t extracted_count = 0;
  for (const auto &[id, lists] : docs) {
    Matching m = match(mode, lists.first, lists.second);
    Credit credit = m.total();
    total += credit;
    gold_count += m.gold.size();
    extracted_count += m.extracted.size();
    report.per_document.push_back({id, compute_metrics(m)});
  }
  report.overall = compute_metrics(total.value(), gold_count, extracted_count);
  report.per_type = per_type_recall(extracted, gold, mode);
  return report;
}

// ---------------------------------------------------------------------------
// Paired comparison.

DiffStats diff_stats(const std::map<std::string, double> &a,
                     const std::map<std::string, double> &b) {
  std::vector<std::string> only_a, only_b;
  for (const auto &[k, v] : a) {
    if (!b.count(k)) only_a.push_back(k);
  }
  for (const auto &[k, v] : b) {
    if (!a.count(k)) only_b.push_back(k);
  }
  if (!only_a.empty() || !only_b.empty()) {
    std::string msg = "document sets differ:";
    for (const auto &k : only_a) msg += " -" + k;
    for (const auto &k : only_b) msg += " +" + k;
    throw MismatchError(msg);
  }
  DiffStats s;
  std::vector<double> values;
  for (const auto &[k, v] : a) {
    double d = v - b.at(k);
    s.differences.emplace_back(k, d);
    values.push_back(d);
    if (std::fabs(d) < kZeroDifference) {
      ++s.zero;
    } else if (d > 0) {
      ++s.positive;
    } else {
      ++s.negative;
    }
  }
  Summary sum = summarize(values);
  s.mean = sum.mean;
  s.sd = sum.sd;
  return s;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

ZTest ztest_mean_greater(double mean, double sd, std::size_t n, double mu0) {
  if (n < 2) throw std::invalid_argument("z-test needs at least 2 samples");
  if (!(sd > kZeroDifference)) {
    throw std::invalid_argument("z-test needs a positive standard deviation");
  }
  ZTest t;
  t.z = (mean - mu0) / (sd / std::sqrt(static_cast<double>(n)));
  // Upper tail computed directly to keep precision for large z.
  t.p_value = 0.5 * std::erfc(t.z / std::sqrt(2.0));
  return t;
}

ZTest ztest_mean_greater(const DiffStats &diffs, double mu0) {
  return ztest_mean_greater(diffs.mean, diffs.sd, diffs.differences.size(),
                            mu0);
}

}  // namespace pampo
