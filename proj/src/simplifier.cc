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

#include "treesimp/simplifier.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <thread>
#include <unordered_map>
#include <utility>

#include "treesimp/np_simplifier.h"
#include "treesimp/ptb.h"

namespace treesimp {

namespace {

bool PassesFilter(const RuleSpec &rule, const EngineOptions &options) {
  if (!options.rule_tag_filter) return true;
  for (const std::string &t : rule.tags) {
    if (options.rule_tag_filter->count(t)) return true;
  }
  return false;
}

// Necessary-rule pass over one tree. Extra variants go to `pending`.
class NecessaryRunner {
 public:
  NecessaryRunner(std::vector<const RuleSpec *> rules, std::size_t max_steps,
                  NecessaryPassResult *result)
      : rules_(std::move(rules)), max_steps_(max_steps), result_(result) {}

  struct Item {
    PtbTree tree;
    std::vector<RuleFiring> provenance;
  };

  Item Run(Item item, std::deque<Item> *pending) {
    cur_ = std::move(item);
    pending_ = pending;
    Address address;
    Visit(address);
    return std::move(cur_);
  }

 private:
  void Visit(Address &address) {
    for (;;) {
      bool changed = false;
      for (const RuleSpec *rule : rules_) {
        std::optional<Bindings> b = MatchRule(*rule, cur_.tree, address);
        if (!b) continue;
        if (++result_->steps > max_steps_) {
          throw StepBudgetExceeded(result_->steps);
        }
        ++result_->rule_fire_counts[rule->name];
        RewriteOutcome out = ApplyRule(*rule, cur_.tree, address, *b);
        std::vector<RuleFiring> prov = cur_.provenance;
        prov.push_back({rule->name, address});
        for (std::size_t i = 1; i < out.revised.size(); ++i) {
          pending_->push_back({out.revised[i], prov});
        }
        for (PtbTree &t : out.spawned) pending_->push_back({std::move(t), prov});
        if (!out.revised.empty()) {
          cur_.tree = out.revised.front();
          cur_.provenance = std::move(prov);
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    const PtbTree &node = cur_.tree.At(address);
    if (node.is_preterminal()) return;
    std::size_t n = node.num_children();
    for (std::size_t i = 0; i < n; ++i) {
      address.push_back(static_cast<int>(i));
      Visit(address);
      address.pop_back();
    }
  }

  std::vector<const RuleSpec *> rules_;
  std::size_t max_steps_;
  NecessaryPassResult *result_;
  Item cur_{PtbTree::Leaf("_"), {}};
  std::deque<Item> *pending_ = nullptr;
};

SimplifiedSentence MakeSentence(PtbTree tree, std::vector<RuleFiring> prov,
                                bool is_base, std::size_t base_index) {
  SimplifiedSentence s{std::move(tree), "", std::move(prov), 0, is_base,
                       base_index};
  s.token_count = s.tree.num_source_tokens();
  return s;
}

// Worklist over the ordered, deduplicated set of trees.
class Closure {
 public:
  Closure(const RuleSet &rules, const EngineOptions &options,
          SimplificationResult *result)
      : rules_(ActiveRules(rules, options, RuleMode::kOptional)),
        options_(options),
        result_(result) {}

  bool Add(SimplifiedSentence s) {
    if (Find(s.tree)) return true;
    return Insert(std::move(s));
  }

  void Run() {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      PtbTree root = entries_[i].tree;
      Address address;
      if (!Expand(i, root, root, address)) return;
    }
  }

  std::vector<SimplifiedSentence> TakeEntries() { return std::move(entries_); }

 private:
  bool Find(const PtbTree &tree) const {
    auto [b, e] = index_.equal_range(tree.hash());
    for (auto it = b; it != e; ++it) {
      if (entries_[it->second].tree == tree) return true;
    }
    return false;
  }

  // Whether root.ReplaceAt(address, replacement) is already in the set.
  bool FindReplaced(const PtbTree &root, const Address &address,
                    const PtbTree &replacement) const {
    auto [b, e] =
        index_.equal_range(root.HashWithReplacement(address, replacement));
    for (auto it = b; it != e; ++it) {
      if (root.EqualsWithReplacement(address, replacement,
                                     entries_[it->second].tree)) {
        return true;
      }
    }
    return false;
  }

  bool Insert(SimplifiedSentence s) {
    if (entries_.size() >= options_.max_generated) {
      result_->truncated = true;
      result_->error = EngineError{
          EngineErrorKind::kGenerationCapReached,
          "generation cap of " + std::to_string(options_.max_generated) +
              " trees reached"};
      return false;
    }
    index_.emplace(s.tree.hash(), entries_.size());
    entries_.push_back(std::move(s));
    return true;
  }

  bool AddProduct(std::size_t source, const RuleSpec &rule,
                  const Address &address, PtbTree tree) {
    std::vector<RuleFiring> prov = entries_[source].provenance;
    prov.push_back({rule.name, address});
    return Insert(MakeSentence(std::move(tree), std::move(prov), false,
                               entries_[source].base_index));
  }

  // Tries every rule at `node` and below. False once a budget is hit.
  bool Expand(std::size_t source, const PtbTree &root, const PtbTree &node,
              Address &address) {
    if (node.is_leaf() || node.is_preterminal()) return true;
    for (const RuleSpec *rule : rules_) {
      std::optional<Bindings> b = MatchNode(*rule, node);
      if (!b) continue;
      if (++result_->steps > options_.max_steps) {
        result_->error =
            EngineError{EngineErrorKind::kStepBudgetExceeded,
                        "step budget of " +
                            std::to_string(options_.max_steps) + " exhausted"};
        return false;
      }
      ++result_->rule_fire_counts[rule->name];
      // Most products are already known; check before building the path.
      NodeRewrite out =
          RewriteNode(*rule, node, *b, root.num_source_tokens());
      for (PtbTree &r : out.replacements) {
        if (FindReplaced(root, address, r)) continue;
        if (!AddProduct(source, *rule, address,
                        root.ReplaceAt(address, std::move(r)))) {
          return false;
        }
      }
      for (PtbTree &t : out.spawned) {
        if (Find(t)) continue;
        if (!AddProduct(source, *rule, address, std::move(t))) return false;
      }
    }
    for (std::size_t i = 0; i < node.num_children(); ++i) {
      address.push_back(static_cast<int>(i));
      bool ok = Expand(source, root, node.child(i), address);
      address.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  std::vector<const RuleSpec *> rules_;
  const EngineOptions &options_;
  SimplificationResult *result_;
  std::vector<SimplifiedSentence> entries_;
  std::unordered_multimap<std::size_t, std::size_t> index_;  // hash -> entry
};

}  // namespace

void EngineOptions::Validate() const {
  if (max_generated == 0) throw std::invalid_argument("max_generated must be positive");
  if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
  if (rule_tag_filter && rule_tag_filter->empty()) {
    throw std::invalid_argument("rule tag filter must not be empty");
  }
}

std::string_view EngineErrorName(EngineErrorKind kind) {
  return kind == EngineErrorKind::kStepBudgetExceeded ? "StepBudgetExceeded"
                                                      : "GenerationCapReached";
}

StepBudgetExceeded::StepBudgetExceeded(std::size_t steps)
    : std::runtime_error("step budget exhausted after " +
                         std::to_string(steps) + " rule applications") {}

std::vector<const RuleSpec *> ActiveRules(const RuleSet &rules,
                                          const EngineOptions &options,
                                          RuleMode mode) {
  std::vector<const RuleSpec *> out;
  for (const RuleSpec &r : rules.rules) {
    if (r.mode == mode && PassesFilter(r, options)) out.push_back(&r);
  }
  return out;
}

NecessaryPassResult NecessaryPass(const PtbTree &tree, const RuleSet &rules,
                                  const EngineOptions &options) {
  NecessaryPassResult result;
  NecessaryRunner runner(ActiveRules(rules, options, RuleMode::kNecessary),
                         options.max_steps, &result);
  std::deque<NecessaryRunner::Item> pending;
  pending.push_back({tree, {}});
  while (!pending.empty()) {
    NecessaryRunner::Item item = std::move(pending.front());
    pending.pop_front();
    NecessaryRunner::Item done = runner.Run(std::move(item), &pending);
    std::size_t ordinal = result.bases.size();
    result.bases.push_back(MakeSentence(std::move(done.tree),
                                        std::move(done.provenance), true,
                                        ordinal));
  }
  return result;
}

SimplificationResult Simplify(const PtbTree &tree, const RuleSet &rules,
                              const EngineOptions &options) {
  options.Validate();
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  SimplificationResult result;
  PtbTree input = options.np_replace ? StripPremodifiers(tree).revised : tree;

  NecessaryPassResult pass;
  try {
    pass = NecessaryPass(input, rules, options);
  } catch (const StepBudgetExceeded &e) {
    result.error = EngineError{EngineErrorKind::kStepBudgetExceeded, e.what()};
    result.steps = options.max_steps;
    result.seconds = elapsed();
    return result;
  }
  result.steps = pass.steps;
  result.rule_fire_counts = pass.rule_fire_counts;

  Closure closure(rules, options, &result);
  bool room = true;
  for (SimplifiedSentence &base : pass.bases) {
    if (room) room = closure.Add(std::move(base));
  }
  if (room) closure.Run();

  std::vector<SimplifiedSentence> entries = closure.TakeEntries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 && !options.emit_original) continue;
    entries[i].sentence = RenderSentence(entries[i].tree);
    result.outputs.push_back(std::move(entries[i]));
  }
  result.seconds = elapsed();
  return result;
}

std::vector<SimplificationResult> SimplifyBatch(
    const std::vector<PtbTree> &trees, const RuleSet &rules,
    const EngineOptions &options, unsigned jobs) {
  options.Validate();
  std::vector<SimplificationResult> results(trees.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, trees.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
      results[i] = Simplify(trees[i], rules, options);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < trees.size();) {
        results[i] = Simplify(trees[i], rules, options);
      }
    });
  }
  for (std::thread &t : workers) t.join();
  return results;
}

}  // namespace treesimp
