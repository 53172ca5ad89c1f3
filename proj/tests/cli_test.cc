// Copyright 2026 The treesimp Authors.
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


#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "support/golden.h"
#include "treesimp/cli.h"

namespace treesimp {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = RunCli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Rules() { return testing::SourcePath("rules/table2.rules"); }
std::string Golden() { return testing::SourcePath("data/golden/table2.ptb"); }

fs::path TempFile(const std::string &name, const std::string &content) {
  fs::path p = fs::temp_directory_path() / ("treesimp_cli_test_" + name);
  std::ofstream(p) << content;
  return p;
}

std::vector<json> JsonLines(const std::string &text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

std::vector<std::string> Blocks(const std::string &text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += line + "\n";
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

TEST_CASE("validate-rules on the shipped file") {
  Run r = Cli({"validate-rules", Rules()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("12 rules OK") != std::string::npos);
}

TEST_CASE("validate-rules reports problems") {
  fs::path unbound = TempFile("unbound.rules", R"(rule r1 mode=optional tags=()
  match NP [ $a:NP $p:PP ]
  keep  [ $a ]
  spawn { S: $x }
  del   { $p }
)");
  Run r = Cli({"validate-rules", unbound.string()});
  CHECK(r.code == kExitFatal);
  CHECK(r.err.find("$x") != std::string::npos);

  fs::path partition = TempFile("partition.rules", R"(rule r1 mode=optional tags=()
  match NP [ $a:NP $p:PP $q:PP ]
  keep  [ $a ]
  del   { $p }
)");
  r = Cli({"validate-rules", partition.string()});
  CHECK(r.code == kExitFatal);
  CHECK(r.err.find("partition") != std::string::npos);

  r = Cli({"validate-rules", "/nonexistent.rules"});
  CHECK(r.code == kExitFatal);
}

TEST_CASE("missing rules file is fatal") {
  Run r = Cli({"simplify", "--rules", "/nonexistent/missing.rules"}, "");
  CHECK(r.code == kExitFatal);
  CHECK_FALSE(r.err.empty());
  CHECK(Cli({"simplify"}).code == kExitFatal);
  CHECK(Cli({"simplify", "--rules", Rules(), "/nonexistent.ptb"}).code ==
        kExitFatal);
}

TEST_CASE("sentences format has one block per input") {
  Run r = Cli({"simplify", "--rules", Rules(), "--format", "sentences",
               Golden()});
  CHECK(r.code == kExitOk);
  CHECK(Blocks(r.out).size() == 12);
}

TEST_CASE("jsonl records carry the documented fields") {
  Run r = Cli({"simplify", "--rules", Rules(), "--format", "jsonl",
               "--np-replace", Golden()});
  CHECK(r.code == kExitOk);
  std::vector<json> recs = JsonLines(r.out);
  REQUIRE_FALSE(recs.empty());
  for (const json &j : recs) {
    CHECK(j.size() == 6);
    for (const char *k :
         {"id", "sentence", "tree", "provenance", "tokenCount", "isBase"}) {
      CHECK(j.contains(k));
    }
  }
  CHECK(recs.front()["id"] == 0);
  CHECK(recs.back()["id"] == 11);
  CHECK(recs.front()["isBase"] == true);
}

TEST_CASE("jsonl sentences cover the golden results") {
  for (bool np_replace : {false, true}) {
    std::vector<std::string> args = {"simplify", "--rules", Rules(), Golden()};
    if (np_replace) args.push_back("--np-replace");
    std::vector<json> recs = JsonLines(Cli(args).out);
    for (const auto &row : testing::LoadGoldenRows()) {
      for (const std::string &e : row.expected) {
        bool found = false;
        for (const json &j : recs) {
          found |= j["id"] == row.row - 1 &&
                   testing::MatchesExpected(e, j["sentence"].get<std::string>());
        }
        CAPTURE(np_replace);
        CAPTURE(e);
        // np replacement rewrites some result strings; only require them all
        // without it.
        if (!np_replace) CHECK(found);
      }
    }
  }
}

TEST_CASE("malformed input gives an error record and exit 2") {
  std::string input =
      "(S (NP (PRP It)) (VP (VBZ works)) (. .))\n"
      "(S (NP (PRP It)\n"
      "(S (NP (PRP We)) (VP (VBD agreed)) (. .))\n";
  Run r = Cli({"simplify", "--rules", Rules()}, input);
  CHECK(r.code == kExitItemErrors);
  std::vector<json> recs = JsonLines(r.out);
  REQUIRE(recs.size() == 3);
  CHECK(recs[1]["id"] == 1);
  CHECK(recs[1]["error"]["kind"] == "MalformedTree");
  CHECK(recs[2]["sentence"] == "We agreed.");

  r = Cli({"simplify", "--rules", Rules(), "--format", "sentences"}, input);
  CHECK(r.code == kExitItemErrors);
  CHECK(r.err.find("input 1: malformed tree") != std::string::npos);
}

TEST_CASE("budget errors are per sentence") {
  Run r = Cli({"simplify", "--rules", Rules(), "--max-steps", "3", Golden()});
  CHECK(r.code == kExitItemErrors);
  bool saw = false;
  for (const json &j : JsonLines(r.out)) {
    saw |= j.contains("error") && j["error"]["kind"] == "StepBudgetExceeded";
  }
  CHECK(saw);
}

TEST_CASE("trees format round-trips") {
  Run r = Cli({"simplify", "--rules", Rules(), "--format", "trees"},
              "(S (NP (PRP It)) (VP (VBZ works)) (. .))\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(S (NP (PRP It)) (VP (VBZ works)) (. .))") !=
        std::string::npos);
}

TEST_CASE("no-base, echo-input and tags") {
  std::string one = testing::ReadFile(Golden());
  one = one.substr(0, one.find('\n') + 1);
  auto all = JsonLines(Cli({"simplify", "--rules", Rules()}, one).out);
  auto nobase =
      JsonLines(Cli({"simplify", "--rules", Rules(), "--no-base"}, one).out);
  CHECK(nobase.size() + 1 == all.size());
  auto echo =
      JsonLines(Cli({"simplify", "--rules", Rules(), "--echo-input"}, one).out);
  REQUIRE(echo.size() == all.size() + 1);
  CHECK(echo[0].contains("input"));
  auto precise = JsonLines(
      Cli({"simplify", "--rules", Rules(), "--tags", "precise"}, one).out);
  CHECK(precise.size() < all.size());
}

TEST_CASE("collapse-duplicates removes repeated sentences") {
  Run plain = Cli({"simplify", "--rules", Rules(), Golden()});
  Run collapsed =
      Cli({"simplify", "--rules", Rules(), "--collapse-duplicates", Golden()});
  std::set<std::pair<int, std::string>> seen;
  std::size_t before = 0;
  for (const json &j : JsonLines(plain.out)) {
    ++before;
    seen.insert({j["id"].get<int>(), j["sentence"].get<std::string>()});
  }
  CHECK(JsonLines(collapsed.out).size() == seen.size());
  CHECK(seen.size() <= before);
}

TEST_CASE("stats file") {
  fs::path stats = fs::temp_directory_path() / "treesimp_cli_test_stats.json";
  Run r = Cli({"simplify", "--rules", Rules(), "--stats", stats.string(),
               Golden()});
  REQUIRE(r.code == kExitOk);
  json s = json::parse(testing::ReadFile(stats.string()));
  CHECK(s["sentencesIn"] == 12);
  CHECK(s["rulesLoaded"] == 12);
  CHECK(s["outputsTotal"] == JsonLines(r.out).size());
  CHECK(s["ruleFireCounts"].size() == 12);
  CHECK(s["wallTimePerSentence"].size() == 12);
  int total = 0;
  for (const auto &[k, v] : s["outputsPerSentence"].items()) {
    total += std::stoi(k) * v.get<int>();
  }
  CHECK(total == s["outputsTotal"]);
}

TEST_CASE("output is identical across runs and job counts") {
  Run a = Cli({"simplify", "--rules", Rules(), Golden()});
  Run b = Cli({"simplify", "--rules", Rules(), "--jobs", "4", Golden()});
  CHECK(a.out == b.out);
}

TEST_CASE("bench corpus is seeded") {
  fs::path c1 = fs::temp_directory_path() / "treesimp_cli_test_c1.ptb";
  fs::path c2 = fs::temp_directory_path() / "treesimp_cli_test_c2.ptb";
  std::vector<std::string> base = {"bench", "--sizes", "10,20", "--per-size",
                                   "2", "--repeats", "1", "--seed", "7"};
  auto with = [&](const fs::path &p) {
    std::vector<std::string> a = base;
    a.push_back("--emit-corpus");
    a.push_back(p.string());
    return Cli(a);
  };
  Run r1 = with(c1);
  Run r2 = with(c2);
  CHECK(r1.code == kExitOk);
  CHECK(r1.out.find("fitted exponent") != std::string::npos);
  CHECK(testing::ReadFile(c1.string()) == testing::ReadFile(c2.string()));
  CHECK_FALSE(testing::ReadFile(c1.string()).empty());
}

TEST_CASE("help exits cleanly") {
  CHECK(Cli({"--help"}).code == kExitOk);
  CHECK(Cli({"frobnicate"}).code == kExitFatal);
}

}  // namespace
}  // namespace treesimp
