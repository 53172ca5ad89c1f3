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

// Exhaustive rule-driven sentence simplification.
//
// Simplify() runs in two phases. The necessary pass walks the tree once in
// pre-order and applies every `necessary` rule at each node until none
// matches there; its result (plus any extra variants it produced) are the
// base trees. The worklist phase then takes trees from the ordered result
// set oldest-first, tries every `optional` rule at every node, and appends
// each new tree it derives. Source trees stay in the set, so the output is
// every sentence reachable from the bases.

#ifndef TREESIMP_SIMPLIFIER_H_
#define TREESIMP_SIMPLIFIER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treesimp/rules.h"
#include "treesimp/tree.h"

namespace treesimp {

struct EngineOptions {
  bool np_replace = false;
  bool emit_original = true;
  std::optional<std::set<std::string>> rule_tag_filter;
  std::size_t max_generated = 512;
  std::size_t max_steps = 10000;

  // Throws std::invalid_argument on zero caps or an empty filter.
  void Validate() const;
};

struct RuleFiring {
  std::string rule;
  Address address;

  friend bool operator==(const RuleFiring &, const RuleFiring &) = default;
};

struct SimplifiedSentence {
  PtbTree tree;
  std::string sentence;
  std::vector<RuleFiring> provenance;
  std::size_t token_count = 0;  // scaffold words excluded
  bool is_base = false;
  std::size_t base_index = 0;   // which base it came from; 0 is the input
};

enum class EngineErrorKind { kStepBudgetExceeded, kGenerationCapReached };

struct EngineError {
  EngineErrorKind kind;
  std::string message;
};

std::string_view EngineErrorName(EngineErrorKind kind);

struct SimplificationResult {
  // Bases first, then discovery order. With emit_original=false the
  // primary base is not listed but was still expanded.
  std::vector<SimplifiedSentence> outputs;
  bool truncated = false;
  std::optional<EngineError> error;
  std::map<std::string, std::size_t> rule_fire_counts;
  std::size_t steps = 0;
  double seconds = 0;  // wall time spent in Simplify
};

class StepBudgetExceeded : public std::runtime_error {
 public:
  explicit StepBudgetExceeded(std::size_t steps);
};

struct NecessaryPassResult {
  // bases[0] is the input after the pass; further entries are extra
  // variants produced by necessary rules, each given its own pass.
  std::vector<SimplifiedSentence> bases;
  std::size_t steps = 0;
  std::map<std::string, std::size_t> rule_fire_counts;
};

// Applies necessary-mode rules. Throws StepBudgetExceeded after
// `max_steps` rule applications.
NecessaryPassResult NecessaryPass(const PtbTree &tree, const RuleSet &rules,
                                  const EngineOptions &options = {});

// Never throws for budget problems; they are reported in `error`.
SimplificationResult Simplify(const PtbTree &tree, const RuleSet &rules,
                              const EngineOptions &options = {});

// Order-preserving Simplify over many trees on up to `jobs` threads.
std::vector<SimplificationResult> SimplifyBatch(
    const std::vector<PtbTree> &trees, const RuleSet &rules,
    const EngineOptions &options = {}, unsigned jobs = 1);

// Rules that survive the options' tag filter, in file order.
std::vector<const RuleSpec *> ActiveRules(const RuleSet &rules,
                                          const EngineOptions &options,
                                          RuleMode mode);

}  // namespace treesimp

#endif  // TREESIMP_SIMPLIFIER_H_
