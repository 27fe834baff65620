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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "pampo/corpus.h"
#include "test_support.h"

namespace pampo {
namespace {

using testing::TempDir;
using testing::write_text;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string fixture_dir(const char *name) { return testing::fixture_path(name).string(); }

std::string tagged(const char *name) {
  std::string n = name;
  return "pretagged=" + testing::fixture_path(n + "/" + n + ".tagged").string();
}

TEST(CliTest, ExtractOlimpicos) {
  Result r = run({"extract", fixture_dir("olimpicos"), "--tagger", tagged("olimpicos")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 23u);
  EXPECT_EQ(ls[0],
            "{\"doc\":\"olimpicos.txt\",\"end\":6,\"sentence\":0,\"start\":0,\"surface\":\"Brasil\"}");
  EXPECT_NE(ls[19].find("\"surface\":\"Vale\""), std::string::npos);
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST(CliTest, ExtractCsvAndTsv) {
  Result csv = run({"extract", fixture_dir("irmandade"), "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  auto ls = lines(csv.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "doc,sentence,start,end,surface");
  EXPECT_EQ(ls[1], "irmandade.txt,0,0,24,Irmandade do Bairro Ut O");
  Result tsv = run({"extract", fixture_dir("irmandade"), "--format", "tsv"});
  EXPECT_EQ(lines(tsv.out)[2], "irmandade.txt\t1\t100\t115\tParlamento do G");
  EXPECT_EQ(run({"extract", fixture_dir("irmandade"), "--format", "xml"}).code, 1);
}

TEST(CliTest, ExtractEmptyCorpus) {
  TempDir dir;
  Result r = run({"extract", dir.path().string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, ConfigErrorsExitOne) {
  TempDir dir;
  write_text(dir.path() / "bad.txt", "[cpb]\nadv : 7\n");
  Result r = run({"extract", fixture_dir("irmandade"), "--patterns",
                  (dir.path() / "bad.txt").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.txt:2"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(run({"extract", "/nonexistent/corpus"}).code, 1);
  EXPECT_EQ(run({"extract", fixture_dir("irmandade"), "--tagger", "magic"}).code, 1);
  EXPECT_EQ(run({"extract", fixture_dir("irmandade"), "--tagger", "pretagged=/nope"}).code, 1);
  EXPECT_EQ(run({"extract"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(CliTest, HelpExitsZero) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("extract"), std::string::npos);
}

TEST(CliTest, PartialFailureExitsTwo) {
  TempDir dir;
  write_text(dir.path() / "good.txt", "Ele viveu em Lisboa.");
  write_text(dir.path() / "bad.txt", "Lis\xFF" "boa.");
  Result r = run({"extract", dir.path().string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(lines(r.out).size(), 1u);
  EXPECT_NE(r.err.find("bad.txt"), std::string::npos);
  EXPECT_EQ(r.err.find("Lisboa"), std::string::npos) << "result data on stderr";
}

TEST(CliTest, PretaggedMissingDocumentIsPartialFailure) {
  TempDir dir;
  write_text(dir.path() / "other.txt", "Viveu em Lisboa.");
  Result r = run({"extract", dir.path().string(), "--tagger", tagged("irmandade")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("other.txt"), std::string::npos);
}

TEST(CliTest, PatternsFromEnvironment) {
  TempDir dir;
  write_text(dir.path() / "p.txt", "[tppb]\nBrasil\n");
  ::setenv("PAMPO_PATTERNS", (dir.path() / "p.txt").string().c_str(), 1);
  Result env = run({"extract", fixture_dir("olimpicos")});
  ::unsetenv("PAMPO_PATTERNS");
  ASSERT_EQ(env.code, 0) << env.err;
  EXPECT_EQ(env.out.find("\"Brasil\""), std::string::npos);
  Result plain = run({"extract", fixture_dir("olimpicos")});
  EXPECT_NE(plain.out.find("\"Brasil\""), std::string::npos);
}

TEST(CliTest, OutFlagWritesFile) {
  TempDir dir;
  auto path = (dir.path() / "out.jsonl").string();
  Result r = run({"extract", fixture_dir("irmandade"), "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(lines(testing::read_text(path)).size(), 5u);
}

TEST(CliTest, WorkersDoNotChangeOutput) {
  TempDir dir;
  testing::write_corpus(testing::synthetic_corpus(60, 8), dir.path() / "c",
                        dir.path() / "g.jsonl");
  Result one = run({"extract", (dir.path() / "c").string()});
  Result many = run({"extract", (dir.path() / "c").string(), "--workers", "6"});
  Result all = run({"extract", (dir.path() / "c").string(), "--workers", "0"});
  ASSERT_EQ(one.code, 0);
  EXPECT_FALSE(one.out.empty());
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.out, all.out);
}

// Gold for the irmandade fixture: the five entities at their offsets.
std::string irmandade_gold() {
  return "{\"doc\":\"irmandade.txt\",\"start\":0,\"end\":24,\"surface\":\"Irmandade do Bairro Ut O\",\"type\":\"ORG\"}\n"
         "{\"doc\":\"irmandade.txt\",\"start\":100,\"end\":115,\"surface\":\"Parlamento do G\",\"type\":\"ORG\"}\n"
         "{\"doc\":\"irmandade.txt\",\"start\":141,\"end\":152,\"surface\":\"Jorge Silva\",\"type\":\"PER\"}\n"
         "{\"doc\":\"irmandade.txt\",\"start\":188,\"end\":191,\"surface\":\"Ian\",\"type\":\"PER\"}\n"
         "{\"doc\":\"irmandade.txt\",\"start\":218,\"end\":231,\"surface\":\"Miguel Relvas\",\"type\":\"PER\"}\n";
}

TEST(CliTest, EvaluatePerfectExtraction) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold());
  Result r = run({"evaluate", fixture_dir("irmandade"), gold, "--extracted", gold});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pooled      1.000   1.000      1.000"), std::string::npos) << r.out;
}

TEST(CliTest, EvaluatePipelineBothModes) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold());
  // "ministro Miguel Relvas" is a super-span of gold "Miguel Relvas": 1/2 in
  // occurrence mode, 2/3 in unique mode.
  Result occ = run({"evaluate", fixture_dir("irmandade"), gold, "--mode", "occurrence",
                    "--format", "csv"});
  ASSERT_EQ(occ.code, 0) << occ.err;
  auto ls = lines(occ.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "doc,gold,extracted,credit,recall,precision,f1");
  EXPECT_EQ(ls[1].rfind("irmandade.txt,5,5,4.5,", 0), 0u) << ls[1];
  Result uni = run({"evaluate", fixture_dir("irmandade"), gold, "--mode", "unique"});
  ASSERT_EQ(uni.code, 0);
  EXPECT_NE(uni.out.find("credit      4.667"), std::string::npos) << uni.out;
  EXPECT_NE(uni.out.find("PER       3  0.889"), std::string::npos) << uni.out;
  EXPECT_NE(uni.out.find("LOC       0  NA"), std::string::npos) << uni.out;
  Result excl = run({"evaluate", fixture_dir("irmandade"), gold, "--exclude-types", "PER"});
  EXPECT_NE(excl.out.find("gold        2"), std::string::npos) << excl.out;
  EXPECT_EQ(run({"evaluate", fixture_dir("irmandade"), gold, "--exclude-types", "DATE"}).code, 1);
  EXPECT_EQ(run({"evaluate", fixture_dir("irmandade"), gold, "--mode", "fuzzy"}).code, 1);
}

TEST(CliTest, EvaluateDanglingDocuments) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold() +
                       "{\"doc\":\"ghost.txt\",\"start\":0,\"end\":3,\"surface\":\"Ana\",\"type\":\"PER\"}\n");
  Result r = run({"evaluate", fixture_dir("irmandade"), gold});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ghost.txt"), std::string::npos);
}

TEST(CliTest, EvaluateWarnsOnOffsetMismatch) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, "{\"doc\":\"irmandade.txt\",\"start\":1,\"end\":24,\"surface\":\"Irmandade do Bairro Ut O\",\"type\":\"ORG\"}\n");
  Result r = run({"evaluate", fixture_dir("irmandade"), gold});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliTest, CompareIdenticalDumps) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold() +
                       "{\"doc\":\"other.txt\",\"start\":0,\"end\":6,\"surface\":\"Lisboa\",\"type\":\"LOC\"}\n");
  Result r = run({"compare", gold, gold, gold, "--mu0", "0,0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("recall             0     2         0  0.000  0.000"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("recall      0.000   NA       NA"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("recall      0.100   NA       NA"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("positive standard deviation"), std::string::npos) << r.err;
}

TEST(CliTest, CompareSingleDocumentHasNoZTest) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold());
  Result r = run({"compare", gold, gold, gold});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("at least 2"), std::string::npos) << r.err;
}

TEST(CliTest, CompareComputesDifferences) {
  TempDir dir;
  auto docs = testing::synthetic_corpus(20, 31);
  std::string gold, ours, theirs;
  std::mt19937 rng(5);
  for (const auto &d : docs) {
    for (const auto &g : d.gold) {
      gold += gold_json(g) + "\n";
      std::string m = "{\"doc\":\"" + d.id + "\",\"surface\":\"" + g.surface + "\"}\n";
      ours += m;
      if (rng() % 2) theirs += m;
    }
  }
  write_text(dir.path() / "g.jsonl", gold);
  write_text(dir.path() / "a.jsonl", ours);
  write_text(dir.path() / "b.jsonl", theirs);
  Result r = run({"compare", (dir.path() / "a.jsonl").string(),
                  (dir.path() / "b.jsonl").string(), (dir.path() / "g.jsonl").string(),
                  "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 21u);
  EXPECT_EQ(ls[0], "doc,recall,precision,f1");

  // Independent recomputation of the recall differences: ours finds every
  // distinct gold surface, theirs a subset.
  std::vector<GoldAnnotation> g_all;
  std::istringstream gin(gold);
  for (const auto &g : read_gold(gin)) g_all.push_back(g);
  std::istringstream tin(theirs);
  auto t_all = read_mentions(tin);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::set<std::string> gs, ts;
    for (const auto &g : g_all) if (g.doc_id == docs[i].id) gs.insert(g.surface);
    for (const auto &t : t_all) if (t.doc_id == docs[i].id) ts.insert(t.surface);
    std::size_t found = 0;
    for (const auto &s : gs) found += ts.count(s);
    double expected = 1.0 - static_cast<double>(found) / gs.size();
    std::istringstream row(ls[i + 1]);
    std::string id, recall;
    std::getline(row, id, ',');
    std::getline(row, recall, ',');
    EXPECT_EQ(id, docs[i].id);
    // Partial credit between distinct surfaces can only shrink the gap.
    EXPECT_LE(std::stod(recall), expected + 1e-12) << id;
    EXPECT_GE(std::stod(recall), 0.0) << id;
  }
}

TEST(CliTest, CompareDocumentMismatch) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold());
  auto other = (dir.path() / "other.jsonl").string();
  write_text(other, "{\"doc\":\"ghost.txt\",\"surface\":\"Ana\"}\n");
  Result r = run({"compare", gold, other, gold});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ghost.txt"), std::string::npos);
  EXPECT_EQ(run({"compare", gold, other, gold, "--mu0", "abc"}).code, 1);
}

TEST(CliTest, StatsAndFreq) {
  TempDir dir;
  auto gold = (dir.path() / "gold.jsonl").string();
  write_text(gold, irmandade_gold());
  Result s = run({"stats", fixture_dir("irmandade"), "--gold", gold});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("documents      1"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("entities_PER   3"), std::string::npos) << s.out;
  Result csv = run({"stats", fixture_dir("irmandade"), "--format", "csv"});
  EXPECT_EQ(lines(csv.out)[0], "statistic,value");

  Result f = run({"freq", fixture_dir("irmandade")});
  ASSERT_EQ(f.code, 0);
  auto ls = lines(f.out);
  ASSERT_EQ(ls.size(), 9u);
  EXPECT_EQ(ls[0], "surface,candidates,selected,kept");
  EXPECT_EQ(ls[1], "Conhecemos,1,0,-");
  Result f2 = run({"freq", fixture_dir("irmandade"), "--min-count", "2"});
  EXPECT_EQ(lines(f2.out).size(), 1u);
}

TEST(CliTest, PatternsDump) {
  Result r = run({"patterns"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[tpb]"), std::string::npos);
  EXPECT_NE(r.out.find("lacks prop n"), std::string::npos);
}

}  // namespace
}  // namespace pampo
