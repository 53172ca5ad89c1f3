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

// Seeded generators for property tests.

#ifndef TREESIMP_TESTS_SUPPORT_GENERATORS_H_
#define TREESIMP_TESTS_SUPPORT_GENERATORS_H_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "treesimp/tree.h"

namespace treesimp::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int Below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
  bool Chance(int percent) { return Below(100) < percent; }
  std::uint64_t Next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Arbitrary well-formed tree: any labels (some with function suffixes), any
// tokens including ones that need escaping. Not meant to be grammatical.
inline PtbTree RandomPtbTree(Rng &rng, int depth) {
  static constexpr std::array<const char *, 10> kLabels = {
      "S", "NP", "VP", "PP", "SBAR", "NP-SBJ", "PP-LOC=2", "ADJP", "PRN", "X"};
  static constexpr std::array<const char *, 8> kTags = {
      "NN", "DT", "VBZ", "-LRB-", "-RRB-", ",", "JJ", "NNP-H"};
  static constexpr std::array<const char *, 12> kTokens = {
      "the", "cell", "(", ")", "[", "]", "{", "}", "a(b)", "p21", ",", "IL-2"};
  if (depth <= 0 || rng.Chance(30)) {
    return PtbTree::Preterminal(kTags[rng.Below(kTags.size())],
                                kTokens[rng.Below(kTokens.size())]);
  }
  std::vector<PtbTree> kids;
  int n = 1 + rng.Below(3);
  for (int i = 0; i < n; ++i) kids.push_back(RandomPtbTree(rng, depth - 1));
  return PtbTree::Internal(NodeLabel::Parse(kLabels[rng.Below(kLabels.size())]),
                           std::move(kids));
}

}  // namespace treesimp::testing

#endif  // TREESIMP_TESTS_SUPPORT_GENERATORS_H_
