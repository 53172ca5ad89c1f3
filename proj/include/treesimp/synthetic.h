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

// Seeded tree generators and the scaling benchmark.

#ifndef TREESIMP_SYNTHETIC_H_
#define TREESIMP_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <vector>

#include "treesimp/rules.h"
#include "treesimp/simplifier.h"
#include "treesimp/tree.h"

namespace treesimp {

// Random sentence trees from a small grammar over S, NP, VP, PP, SBAR, PRN
// and ADJP, built so that every default rule has something to match.
class TreeFuzzer {
 public:
  explicit TreeFuzzer(std::uint64_t seed) : rng_(seed) {}

  // A tree with at most `max_tokens` tokens (max_tokens >= 3).
  PtbTree Next(int max_tokens);

 private:
  int Pick(int n);
  bool Chance(int percent) { return Pick(100) < percent; }
  PtbTree Word(std::string_view tag);

  PtbTree Sentence(int depth);
  PtbTree Clause(int depth);
  PtbTree BaseNp();
  PtbTree Np(int depth);
  PtbTree Vp(int depth);
  PtbTree Pp(int depth);
  PtbTree Adjp(int depth);
  PtbTree RelativeClause(int depth);
  PtbTree Postmodifier(int depth);

  std::mt19937_64 rng_;
};

// "The x binds the x of the x of ..." with exactly `tokens` tokens
// (tokens >= 7): a right-branching NP-PP chain under the object.
PtbTree RightBranchingTree(int tokens, std::uint64_t seed);

struct PowerFit {
  double exponent = 0;
  double log_scale = 0;
};

// Least-squares fit of log(y) = log_scale + exponent * log(x).
PowerFit FitPowerLaw(const std::vector<double> &x, const std::vector<double> &y);

double Median(std::vector<double> values);

struct BenchOptions {
  std::vector<int> sizes = {10, 20, 40, 80, 160, 320};
  int per_size = 15;
  int repeats = 3;
  std::uint64_t seed = 7;
};

struct BenchRow {
  int tokens = 0;
  double median_seconds = 0;
  double mean_outputs = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  PowerFit fit;
  double total_seconds = 0;
};

std::vector<std::vector<PtbTree>> BenchCorpus(const BenchOptions &options);

BenchReport RunBench(const RuleSet &rules, const BenchOptions &options,
                     const EngineOptions &engine = {});

}  // namespace treesimp

#endif  // TREESIMP_SYNTHETIC_H_
