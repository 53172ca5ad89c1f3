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

#ifndef TREESIMP_NP_SIMPLIFIER_H_
#define TREESIMP_NP_SIMPLIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "treesimp/tree.h"

namespace treesimp {

// One base NP reduced to its leading determinative/numeral and head noun.
struct BaseNpEdit {
  Address address;
  std::vector<std::string> removed_tokens;
  std::optional<std::string> kept_determinative;
  std::string head_noun;
};

struct PremodifierResult {
  PtbTree revised;
  std::vector<BaseNpEdit> edits;
};

// NPs whose children are all preterminals, depth-first pre-order.
std::vector<Address> FindBaseNps(const PtbTree &tree);

// Reduces every base NP to [DT|CD|PDT]? head, where the head is the last
// nominal (NN*) child. Coordinated NPs and NPs without a nominal child are
// left alone.
PremodifierResult StripPremodifiers(const PtbTree &tree);

}  // namespace treesimp

#endif  // TREESIMP_NP_SIMPLIFIER_H_
