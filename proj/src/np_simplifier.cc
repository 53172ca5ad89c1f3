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

#include "treesimp/np_simplifier.h"

#include <algorithm>

namespace treesimp {

namespace {

bool IsBaseNp(const PtbTree &node) {
  if (node.is_leaf() || node.tag() != "NP") return false;
  return std::all_of(node.children().begin(), node.children().end(),
                     [](const PtbTree &c) { return c.is_preterminal(); });
}

}  // namespace

std::vector<Address> FindBaseNps(const PtbTree &tree) {
  return FindNodes(tree, IsBaseNp);
}

PremodifierResult StripPremodifiers(const PtbTree &tree) {
  PremodifierResult result{tree, {}};
  // Edits keep addresses valid: they only change the children of base NPs,
  // which have no NP descendants.
  for (const Address &address : FindBaseNps(tree)) {
    const PtbTree &np = tree.At(address);
    auto children = np.children();
    if (std::any_of(children.begin(), children.end(),
                    [](const PtbTree &c) { return c.tag() == "CC"; })) {
      continue;
    }
    int head = -1;
    for (int i = static_cast<int>(children.size()) - 1; i >= 0; --i) {
      if (children[i].label().IsNominalHeadTag()) {
        head = i;
        break;
      }
    }
    if (head < 0) continue;

    bool keep_det = head > 0 && children[0].label().IsDeterminativeOrNumeral();
    std::size_t kept = keep_det ? 2 : 1;
    if (kept == children.size()) continue;

    BaseNpEdit edit;
    edit.address = address;
    edit.head_noun = children[head].child(0).token();
    std::vector<PtbTree> reduced;
    if (keep_det) {
      edit.kept_determinative = children[0].child(0).token();
      reduced.push_back(children[0]);
    }
    reduced.push_back(children[head]);
    for (int i = 0; i < static_cast<int>(children.size()); ++i) {
      if (i == head || (keep_det && i == 0)) continue;
      edit.removed_tokens.push_back(children[i].child(0).token());
    }
    result.revised =
        result.revised.ReplaceAt(address, np.WithChildren(std::move(reduced)));
    result.edits.push_back(std::move(edit));
  }
  return result;
}

}  // namespace treesimp
