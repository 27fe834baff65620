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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pampo/corpus.h"
#include "pampo/error.h"
#include "pampo/evaluation.h"
#include "pampo/pattern_bases.h"
#include "pampo/pipeline.h"
#include "pampo/pos.h"

namespace pampo::cli {

namespace {

struct Options {
  std::string patterns;
  std::string tagger = "builtin";
  std::string mode = "unique";
  std::string exclude_types;
  std::size_t min_count = 1;
  std::string mu0 = "0";
  std::string format;
  std::string out_path;
  std::size_t workers = 1;

  std::string corpus;
  std::string gold;
  std::string extracted;
  std::string ours;
  std::string theirs;
};

// Raised for bad flags or unloadable inputs; maps to kConfigError.
struct ConfigError : Error {
  using Error::Error;
};

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

class Table {
 public:
  explicit Table(char delim) : delim_(delim) {}

  void row(const std::vector<std::string> &fields, std::ostream &out) const {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << delim_;
      out << escape(fields[i]);
    }
    out << '\n';
  }

 private:
  std::string escape(const std::string &f) const {
    if (delim_ == '\t') {
      std::string s = f;
      std::replace(s.begin(), s.end(), '\t', ' ');
      std::replace(s.begin(), s.end(), '\n', ' ');
      return s;
    }
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string s = "\"";
    for (char c : f) {
      if (c == '"') s += '"';
      s += c;
    }
    return s + "\"";
  }

  char delim_;
};

char delimiter(const std::string &format) { return format == "tsv" ? '\t' : ','; }

PatternBases load_bases(const Options &o) {
  std::string path = o.patterns;
  if (path.empty()) {
    if (const char *env = std::getenv("PAMPO_PATTERNS"); env && *env) path = env;
  }
  if (path.empty()) return default_bases();
  return load_pattern_bases(path);
}

std::shared_ptr<const TagProvider> load_tagger(const Options &o,
                                               std::ostream &err) {
  if (o.tagger == "builtin") return builtin_tagger();
  const std::string prefix = "pretagged=";
  if (o.tagger.rfind(prefix, 0) == 0 && o.tagger.size() > prefix.size()) {
    auto provider = PretaggedProvider::load(o.tagger.substr(prefix.size()));
    for (const auto &w : provider->warnings()) err << "warning: " << w << '\n';
    return provider;
  }
  throw ConfigError("--tagger must be 'builtin' or 'pretagged=PATH', got '" +
                    o.tagger + "'");
}

EvalMode parse_mode(const std::string &s) {
  if (s == "unique") return EvalMode::kUniqueFractional;
  if (s == "occurrence") return EvalMode::kOccurrenceHalf;
  throw ConfigError("--mode must be 'occurrence' or 'unique', got '" + s + "'");
}

std::set<EntityType> parse_excluded(const std::string &s) {
  std::set<EntityType> out;
  for (const auto &name : split_list(s)) {
    auto t = parse_entity_type(name);
    if (!t) throw ConfigError("unknown entity type in --exclude-types: " + name);
    out.insert(*t);
  }
  return out;
}

std::vector<double> parse_mu0(const std::string &s) {
  std::vector<double> out;
  for (const auto &item : split_list(s)) {
    char *end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end) throw ConfigError("bad --mu0 value: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--mu0 needs at least one value");
  return out;
}

std::size_t worker_count(const Options &o) {
  if (o.workers) return o.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Destination for result data: the --out file or the given stream.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw ConfigError("cannot open output file " + path);
    stream_ = &file_;
  }
  std::ostream &operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream *stream_;
};

Corpus load_corpus_reporting(const std::string &dir, std::ostream &err) {
  Corpus corpus = load_corpus(dir);
  for (const auto &f : corpus.failures) {
    err << "error: " << f.path << ": " << f.message << '\n';
  }
  return corpus;
}

struct Extraction {
  std::vector<CandidateEntity> candidates;
  std::vector<NamedEntity> entities;
  bool failed = false;
};

Extraction extract_corpus(const Corpus &corpus, const Options &o,
                          std::ostream &err) {
  PatternBases bases = load_bases(o);
  auto tagger = load_tagger(o, err);
  auto results = run_pipeline(corpus.documents, bases, *tagger, worker_count(o));
  Extraction ex;
  ex.failed = !corpus.failures.empty();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto &r = results[i];
    if (!r.error.empty()) {
      err << "error: " << corpus.documents[i].id() << ": " << r.error << '\n';
      ex.failed = true;
      continue;
    }
    std::move(r.candidates.begin(), r.candidates.end(),
              std::back_inserter(ex.candidates));
    std::move(r.entities.begin(), r.entities.end(),
              std::back_inserter(ex.entities));
  }
  return ex;
}

void report_failures(const Corpus &corpus, std::ostream &err) {
  if (corpus.failures.empty()) return;
  err << "failed files:";
  for (const auto &f : corpus.failures) err << ' ' << f.path;
  err << '\n';
}

// ---------------------------------------------------------------------------

int cmd_extract(const Options &o, std::ostream &out, std::ostream &err) {
  std::string format = o.format.empty() ? "jsonl" : o.format;
  if (format != "jsonl" && format != "csv" && format != "tsv") {
    throw ConfigError("extract supports --format jsonl, csv or tsv");
  }
  Corpus corpus = load_corpus_reporting(o.corpus, err);
  Extraction ex = extract_corpus(corpus, o, err);
  Sink sink(o.out_path, out);
  if (format == "jsonl") {
    for (const auto &e : ex.entities) *sink << entity_json(e) << '\n';
  } else {
    Table t(delimiter(format));
    t.row({"doc", "sentence", "start", "end", "surface"}, *sink);
    for (const auto &e : ex.entities) {
      t.row({e.doc_id, std::to_string(e.sentence_index), std::to_string(e.start),
             std::to_string(e.end), e.surface},
            *sink);
    }
  }
  report_failures(corpus, err);
  return ex.failed ? kPartialFailure : kOk;
}

std::string na_or(bool undefined, double v, bool human) {
  if (undefined) return "NA";
  return human ? fixed(v) : full(v);
}

void print_report(const EvalReport &r, std::ostream &out) {
  out << "mode        " << to_string(r.mode) << '\n';
  out << "documents   " << r.per_document.size() << '\n';
  out << "gold        " << r.overall.gold << '\n';
  out << "extracted   " << r.overall.extracted << '\n';
  out << "credit      " << fixed(r.overall.credit) << '\n';
  out << '\n';
  out << "            recall  precision  f1\n";
  out << "pooled      " << na_or(r.overall.recall_undefined, r.overall.recall, true)
      << "   " << na_or(r.overall.precision_undefined, r.overall.precision, true)
      << "      " << fixed(r.overall.f1) << '\n';
  Summary rs = r.recall_summary(), ps = r.precision_summary(), fs = r.f1_summary();
  out << "doc mean    " << fixed(rs.mean) << "   " << fixed(ps.mean) << "      "
      << fixed(fs.mean) << '\n';
  out << "doc sd      " << fixed(rs.sd) << "   " << fixed(ps.sd) << "      "
      << fixed(fs.sd) << '\n';
  out << '\n';
  out << "type  gold  recall\n";
  for (const auto &[type, tr] : r.per_type) {
    char line[64];
    std::snprintf(line, sizeof line, "%-5s %5zu  ", to_string(type), tr.gold);
    out << line << na_or(tr.undefined, tr.recall, true) << '\n';
  }
}

void print_document_scores(const EvalReport &r, char delim, std::ostream &out) {
  Table t(delim);
  t.row({"doc", "gold", "extracted", "credit", "recall", "precision", "f1"}, out);
  for (const auto &d : r.per_document) {
    const Metrics &m = d.metrics;
    t.row({d.doc_id, std::to_string(m.gold), std::to_string(m.extracted),
           full(m.credit), na_or(m.recall_undefined, m.recall, false),
           na_or(m.precision_undefined, m.precision, false), full(m.f1)},
          out);
  }
}

bool check_dangling(const std::vector<Document> &docs,
                    const std::vector<GoldAnnotation> &gold, std::ostream &err) {
  auto dangling = dangling_documents(docs, gold);
  if (dangling.empty()) return true;
  err << "error: gold refers to documents missing from the corpus:";
  for (const auto &d : dangling) err << ' ' << d;
  err << '\n';
  return false;
}

void warn_offsets(const std::vector<Document> &docs,
                  const std::vector<GoldAnnotation> &gold, std::ostream &err) {
  for (const auto &msg : check_gold_offsets(docs, gold)) {
    err << "warning: gold " << msg << '\n';
  }
}

std::string human_or_machine(const Options &o) {
  std::string format = o.format.empty() ? "text" : o.format;
  if (format != "text" && format != "csv" && format != "tsv") {
    throw ConfigError("this command supports --format text, csv or tsv");
  }
  return format;
}

int cmd_evaluate(const Options &o, std::ostream &out, std::ostream &err) {
  std::string format = human_or_machine(o);
  EvalMode mode = parse_mode(o.mode);
  auto excluded = parse_excluded(o.exclude_types);
  auto gold = filter_gold_types(load_gold(o.gold), excluded);
  Corpus corpus = load_corpus_reporting(o.corpus, err);
  if (!check_dangling(corpus.documents, gold, err)) return kPartialFailure;
  warn_offsets(corpus.documents, gold, err);

  bool failed = !corpus.failures.empty();
  std::vector<Mention> mentions;
  if (!o.extracted.empty()) {
    mentions = load_mentions(o.extracted);
  } else {
    Extraction ex = extract_corpus(corpus, o, err);
    failed = ex.failed;
    mentions = to_mentions(ex.entities);
  }
  EvalReport report = evaluate(mentions, gold, mode);
  Sink sink(o.out_path, out);
  if (format == "text") {
    print_report(report, *sink);
  } else {
    print_document_scores(report, delimiter(format), *sink);
  }
  report_failures(corpus, err);
  return failed ? kPartialFailure : kOk;
}

std::map<std::string, Metrics> scores_by_document(
    const std::vector<Mention> &mentions, const std::vector<GoldAnnotation> &gold,
    EvalMode mode, const std::string &label) {
  std::set<std::string> gold_docs;
  for (const auto &g : gold) gold_docs.insert(g.doc_id);
  std::set<std::string> stray;
  for (const auto &m : mentions) {
    if (!gold_docs.count(m.doc_id)) stray.insert(m.doc_id);
  }
  if (!stray.empty()) {
    std::string msg = label + " mentions documents without gold:";
    for (const auto &d : stray) msg += " " + d;
    throw MismatchError(msg);
  }
  std::map<std::string, Metrics> out;
  for (const auto &d : evaluate(mentions, gold, mode).per_document) {
    out[d.doc_id] = d.metrics;
  }
  return out;
}

int cmd_compare(const Options &o, std::ostream &out, std::ostream &err) {
  std::string format = human_or_machine(o);
  EvalMode mode = parse_mode(o.mode);
  auto excluded = parse_excluded(o.exclude_types);
  auto mu0s = parse_mu0(o.mu0);
  auto gold = filter_gold_types(load_gold(o.gold), excluded);
  auto ours = load_mentions(o.ours);
  auto theirs = load_mentions(o.theirs);

  auto a = scores_by_document(ours, gold, mode, o.ours);
  auto b = scores_by_document(theirs, gold, mode, o.theirs);

  struct Row {
    const char *name;
    DiffStats stats;
  };
  auto field = [](const std::map<std::string, Metrics> &m, double Metrics::*f) {
    std::map<std::string, double> out;
    for (const auto &[id, metrics] : m) out[id] = metrics.*f;
    return out;
  };
  std::vector<Row> rows = {
      {"recall", diff_stats(field(a, &Metrics::recall), field(b, &Metrics::recall))},
      {"precision",
       diff_stats(field(a, &Metrics::precision), field(b, &Metrics::precision))},
      {"f1", diff_stats(field(a, &Metrics::f1), field(b, &Metrics::f1))},
  };

  Sink sink(o.out_path, out);
  if (format != "text") {
    Table t(delimiter(format));
    t.row({"doc", "recall", "precision", "f1"}, *sink);
    for (std::size_t i = 0; i < rows[0].stats.differences.size(); ++i) {
      t.row({rows[0].stats.differences[i].first,
             full(rows[0].stats.differences[i].second),
             full(rows[1].stats.differences[i].second),
             full(rows[2].stats.differences[i].second)},
            *sink);
    }
    return kOk;
  }

  *sink << "mode        " << to_string(mode) << '\n';
  *sink << "documents   " << rows[0].stats.differences.size() << '\n';
  *sink << '\n';
  *sink << "metric      positive  zero  negative  mean    sd\n";
  for (const auto &r : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%-11s %8zu  %4zu  %8zu  %s  %s\n", r.name,
                  r.stats.positive, r.stats.zero, r.stats.negative,
                  fixed(r.stats.mean).c_str(), fixed(r.stats.sd).c_str());
    *sink << line;
  }
  *sink << '\n';
  *sink << "metric      mu0     z        p\n";
  for (const auto &r : rows) {
    bool noted = false;
    for (double mu0 : mu0s) {
      char line[128];
      try {
        ZTest z = ztest_mean_greater(r.stats, mu0);
        std::snprintf(line, sizeof line, "%-11s %-7s %-8s %s\n", r.name,
                      fixed(mu0).c_str(), fixed(z.z).c_str(),
                      sci(z.p_value).c_str());
      } catch (const std::invalid_argument &e) {
        if (!noted) err << "note: " << r.name << ": " << e.what() << '\n';
        noted = true;
        std::snprintf(line, sizeof line, "%-11s %-7s %-8s %s\n", r.name,
                      fixed(mu0).c_str(), "NA", "NA");
      }
      *sink << line;
    }
  }
  return kOk;
}

int cmd_stats(const Options &o, std::ostream &out, std::ostream &err) {
  std::string format = human_or_machine(o);
  Corpus corpus = load_corpus_reporting(o.corpus, err);
  std::vector<GoldAnnotation> gold;
  if (!o.gold.empty()) gold = load_gold(o.gold);
  if (!check_dangling(corpus.documents, gold, err)) return kPartialFailure;
  warn_offsets(corpus.documents, gold, err);
  CorpusStats s = corpus_stats(corpus.documents, gold);

  std::vector<std::pair<std::string, std::string>> rows = {
      {"documents", std::to_string(s.documents)},
      {"words_min", std::to_string(s.min_words)},
      {"words_max", std::to_string(s.max_words)},
      {"words_mean", format == "text" ? fixed(s.mean_words, 1) : full(s.mean_words)},
      {"entities", std::to_string(s.entities)},
  };
  for (const auto &[type, n] : s.entities_by_type) {
    rows.emplace_back(std::string("entities_") + to_string(type), std::to_string(n));
  }
  Sink sink(o.out_path, out);
  if (format == "text") {
    for (const auto &[k, v] : rows) {
      char line[128];
      std::snprintf(line, sizeof line, "%-14s %s\n", k.c_str(), v.c_str());
      *sink << line;
    }
  } else {
    Table t(delimiter(format));
    t.row({"statistic", "value"}, *sink);
    for (const auto &[k, v] : rows) t.row({k, v}, *sink);
  }
  report_failures(corpus, err);
  return corpus.failures.empty() ? kOk : kPartialFailure;
}

int cmd_freq(const Options &o, std::ostream &out, std::ostream &err) {
  std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "tsv") {
    throw ConfigError("freq supports --format csv or tsv");
  }
  Corpus corpus = load_corpus_reporting(o.corpus, err);
  Extraction ex = extract_corpus(corpus, o, err);
  auto report = frequency_report(ex.candidates, ex.entities, o.min_count);
  Sink sink(o.out_path, out);
  Table t(delimiter(format));
  t.row({"surface", "candidates", "selected", "kept"}, *sink);
  for (const auto &r : report) {
    t.row({r.surface, std::to_string(r.candidates), std::to_string(r.selected),
           r.kept ? "+" : "-"},
          *sink);
  }
  report_failures(corpus, err);
  return ex.failed ? kPartialFailure : kOk;
}

int cmd_patterns(const Options &o, std::ostream &out, std::ostream &) {
  Sink sink(o.out_path, out);
  *sink << serialize(load_bases(o));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options o;
  CLI::App app{"Two-phase named entity extraction for Portuguese text", "pampo"};
  app.require_subcommand(1);

  auto pipeline_flags = [&o](CLI::App *sub) {
    sub->add_option("--patterns", o.patterns,
                    "Pattern-base file (default: $PAMPO_PATTERNS or built-in)");
    sub->add_option("--tagger", o.tagger, "builtin or pretagged=PATH");
    sub->add_option("--workers", o.workers, "Worker threads (0: one per core)");
  };
  auto output_flags = [&o](CLI::App *sub, const char *formats) {
    sub->add_option("--format", o.format, formats);
    sub->add_option("--out", o.out_path, "Write results to this file");
  };
  auto eval_flags = [&o](CLI::App *sub) {
    sub->add_option("--mode", o.mode, "occurrence or unique (default unique)");
    sub->add_option("--exclude-types", o.exclude_types,
                    "Comma-separated gold types to ignore (PER,LOC,ORG,MISC)");
  };

  auto *extract = app.add_subcommand("extract", "Extract named entities");
  extract->add_option("corpus", o.corpus, "Directory of .txt documents")->required();
  pipeline_flags(extract);
  output_flags(extract, "jsonl (default), csv or tsv");

  auto *evaluate_cmd = app.add_subcommand("evaluate", "Score extraction against gold");
  evaluate_cmd->add_option("corpus", o.corpus, "Directory of .txt documents")->required();
  evaluate_cmd->add_option("gold", o.gold, "Gold annotations (JSON lines)")->required();
  evaluate_cmd->add_option("--extracted", o.extracted,
                           "Score this extraction dump instead of running the pipeline");
  pipeline_flags(evaluate_cmd);
  eval_flags(evaluate_cmd);
  output_flags(evaluate_cmd, "text (default), or csv/tsv per-document scores");

  auto *compare = app.add_subcommand("compare", "Paired comparison of two extractors");
  compare->add_option("ours", o.ours, "Extraction dump A (JSON lines)")->required();
  compare->add_option("theirs", o.theirs, "Extraction dump B (JSON lines)")->required();
  compare->add_option("gold", o.gold, "Gold annotations (JSON lines)")->required();
  compare->add_option("--mu0", o.mu0, "Comma-separated null means for the z-test");
  eval_flags(compare);
  output_flags(compare, "text (default), or csv/tsv per-document differences");

  auto *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("corpus", o.corpus, "Directory of .txt documents")->required();
  stats->add_option("--gold", o.gold, "Gold annotations (JSON lines)");
  output_flags(stats, "text (default), csv or tsv");

  auto *freq = app.add_subcommand("freq", "Candidate frequency report");
  freq->add_option("corpus", o.corpus, "Directory of .txt documents")->required();
  freq->add_option("--min-count", o.min_count, "Minimum candidate count (default 1)");
  pipeline_flags(freq);
  output_flags(freq, "csv (default) or tsv");

  auto *patterns = app.add_subcommand("patterns", "Print the effective pattern bases");
  patterns->add_option("--patterns", o.patterns, "Pattern-base file");
  patterns->add_option("--out", o.out_path, "Write to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (extract->parsed()) return cmd_extract(o, out, err);
    if (evaluate_cmd->parsed()) return cmd_evaluate(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out, err);
    if (stats->parsed()) return cmd_stats(o, out, err);
    if (freq->parsed()) return cmd_freq(o, out, err);
    if (patterns->parsed()) return cmd_patterns(o, out, err);
  } catch (const MismatchError &e) {
    err << "error: " << e.what() << '\n';
    return kPartialFailure;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace pampo::cli
