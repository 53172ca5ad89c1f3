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

#ifndef TREESIMP_TESTS_SUPPORT_GOLDEN_H_
#define TREESIMP_TESTS_SUPPORT_GOLDEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "treesimp/tree.h"

namespace treesimp::testing {

// Absolute path of a file under the source tree.
std::string SourcePath(std::string_view relative);
std::string ReadFile(const std::string &path);

struct GoldenRow {
  int row = 0;
  std::string rule;
  PtbTree tree;
  std::vector<std::string> expected;
};

// data/golden/table2.ptb paired with data/golden/table2_expected.json.
std::vector<GoldenRow> LoadGoldenRows();

// Collapses whitespace and drops spaces before , . ; : ) ] % and after ( [.
std::string NormalizeSentence(std::string_view s);

// "..." in `expected` matches any text; elsewhere the match is exact and
// anchored at both ends.
bool MatchesExpected(std::string_view expected, std::string_view actual);

}  // namespace treesimp::testing

#endif  // TREESIMP_TESTS_SUPPORT_GOLDEN_H_
