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


#include <cmath>
#include <set>
#include <string>

#include "doctest.h"
#include "treesimp/ptb.h"
#include "treesimp/synthetic.h"

namespace treesimp {
namespace {

TEST_CASE("fuzzer is seeded and bounded") {
  TreeFuzzer a(5), b(5), c(6);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    int max_tokens = 3 + i % 40;
    PtbTree x = a.Next(max_tokens);
    PtbTree y = b.Next(max_tokens);
    PtbTree z = c.Next(max_tokens);
    CHECK(x == y);
    differs |= !(x == z);
    CHECK(x.num_leaves() <= static_cast<std::size_t>(max_tokens));
    CHECK(ParsePtb(Serialize(x)) == x);
  }
  CHECK(differs);
}

TEST_CASE("fuzzer covers the phrase types the rules look at") {
  TreeFuzzer f(1);
  std::set<std::string> tags;
  for (int i = 0; i < 300; ++i) {
    ForEachNode(f.Next(15), [&](const PtbTree &n, const Address &) {
      if (!n.is_leaf()) tags.insert(n.tag());
    });
  }
  for (const char *t : {"S", "NP", "VP", "PP", "SBAR", "PRN", "ADJP", "WHNP",
                        "CC", "-LRB-", "MD", "VBN", "VBG"}) {
    CAPTURE(t);
    CHECK(tags.count(t) == 1);
  }
}

TEST_CASE("right-branching trees have the requested size") {
  for (int n : {7, 10, 11, 20, 33, 80, 320}) {
    CAPTURE(n);
    PtbTree t = RightBranchingTree(n, 3);
    CHECK(t.num_leaves() == static_cast<std::size_t>(n));
    CHECK(t.tag() == "S");
    CHECK(RightBranchingTree(n, 3) == t);
  }
}

TEST_CASE("power-law fit recovers a known exponent") {
  std::vector<double> x, y;
  for (double v : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    x.push_back(v);
    y.push_back(0.5 * std::pow(v, 2.25));
  }
  PowerFit fit = FitPowerLaw(x, y);
  CHECK(fit.exponent == doctest::Approx(2.25).epsilon(1e-9));
  CHECK(fit.log_scale == doctest::Approx(std::log(0.5)).epsilon(1e-9));
}

TEST_CASE("median") {
  CHECK(Median({3, 1, 2}) == 2);
  CHECK(Median({4, 1, 3, 2}) == 2.5);
  CHECK(Median({7}) == 7);
}

TEST_CASE("bench corpus depends only on the options") {
  BenchOptions opts;
  opts.sizes = {10, 20};
  opts.per_size = 4;
  auto a = BenchCorpus(opts);
  auto b = BenchCorpus(opts);
  REQUIRE(a.size() == 2);
  CHECK(a == b);
  for (const PtbTree &t : a[1]) CHECK(t.num_leaves() == 20);
  opts.seed = 8;
  CHECK_FALSE(BenchCorpus(opts) == a);
}

TEST_CASE("bench report has one row per size") {
  BenchOptions opts;
  opts.sizes = {10, 20, 40};
  opts.per_size = 3;
  opts.repeats = 1;
  BenchReport r = RunBench(LoadRuleSet(DefaultRulesText()), opts);
  REQUIRE(r.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.rows[i].tokens == opts.sizes[i]);
    CHECK(r.rows[i].median_seconds > 0);
    CHECK(r.rows[i].mean_outputs >= 1);
  }
  CHECK(std::isfinite(r.fit.exponent));
}

}  // namespace
}  // namespace treesimp
