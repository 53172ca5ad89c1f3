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

// Declarative tree rewrite rules.
//
// A rule names a parent label and a pattern over that node's children:
//
//   rule np_pp_postmod  mode=optional tags=(precise)
//     match NP [ $a:NP $p:PP ]
//     keep  [ $a ]
//     del   { $p }
//
// Matched children end up in one of three places: a `keep` list (they stay
// in the rewritten copy of the source tree), a `spawn` template (they are
// copied into a new standalone tree), or `del` (dropped). Every `keep`
// clause produces one rewritten tree, so a rule with two keeps yields two
// alternative revisions. Literal elements such as `,` or CC are matched but
// never kept. `...` matches any run of children at the start or end of the
// pattern; in keep and spawn lists the k-th `...` re-inserts the k-th gap.
//
// Conditions (`where` lines) look at the immediate children of a bound
// child, or of the matched node for the `self_` forms:
//
//   contains($v, TAG)   contains($v, {A B})   any listed tag present
//   lacks($v, TAG)                             none present
//   contains_all($v, {A B})                    every tag present
//   not_all($v, {A B})                         at least one tag missing
//   first_pos($v) in {VBG VBN}                 POS of the leftmost word
//
// Template items: `$v`, `$self` (spawn only), `...`, `lit(MD,"can")`
// (inserted scaffold word), `strip_brackets($v)`, `subst_whnp($v, $w)`
// (spawn only: the first WHNP under $v replaced by a copy of $w).

#ifndef TREESIMP_RULES_H_
#define TREESIMP_RULES_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treesimp/tree.h"

namespace treesimp {

enum class RuleMode { kNecessary, kOptional };

std::string_view RuleModeName(RuleMode mode);

struct PatternElement {
  enum class Kind { kVar, kLit, kGap };

  Kind kind = Kind::kLit;
  std::string var;  // kVar only, without the '$'
  std::string tag;  // "^" means "same tag as the matched node"
};

struct Condition {
  enum class Kind { kContains, kLacks, kContainsAll, kNotAll, kFirstLeafPos };

  Kind kind = Kind::kContains;
  std::string var;  // empty: the matched node itself
  std::vector<std::string> tags;
};

struct TemplateItem {
  enum class Kind {
    kRef,
    kGap,
    kSelf,
    kScaffold,
    kStripBrackets,
    kSubstituteWhnp,
  };

  Kind kind = Kind::kRef;
  std::string var;
  std::string with_var;  // kSubstituteWhnp
  int gap = 0;           // kGap: ordinal among the pattern's gaps
  std::string tag;       // kScaffold
  std::string token;     // kScaffold
};

struct SpawnTemplate {
  std::string root_tag = "S";
  std::vector<TemplateItem> items;
};

struct RuleSpec {
  std::string name;
  RuleMode mode = RuleMode::kOptional;
  std::set<std::string> tags;
  std::vector<std::string> parent_tags;
  std::vector<PatternElement> pattern;
  std::vector<Condition> conditions;
  std::vector<std::vector<TemplateItem>> keep;
  std::vector<SpawnTemplate> spawn;
  std::vector<std::string> del;
  int line = 0;

  bool MatchesParent(const std::string &tag) const;
  int NumGaps() const;
};

struct RuleSet {
  std::vector<RuleSpec> rules;
  std::string source_path;

  std::size_t size() const { return rules.size(); }
  const RuleSpec *Find(std::string_view name) const;
};

class DslSyntaxError : public std::runtime_error {
 public:
  DslSyntaxError(int line, const std::string &message);
  int line() const { return line_; }

 private:
  int line_;
};

class DslSemanticError : public std::runtime_error {
 public:
  explicit DslSemanticError(const std::string &message)
      : std::runtime_error(message) {}
};

// A rule whose evaluation would leave an internal node with no children.
class EmptyNode : public std::runtime_error {
 public:
  explicit EmptyNode(const std::string &message)
      : std::runtime_error(message) {}
};

struct RuleDiagnostic {
  enum class Check { kStructure, kBinding, kPartition, kShrinking, kDuplicate };

  Check check = Check::kStructure;
  std::string rule;
  int line = 0;
  std::string message;

  std::string ToString() const;
};

std::string_view CheckName(RuleDiagnostic::Check check);

// Parses DSL text without semantic validation. Throws DslSyntaxError.
RuleSet ParseRuleSet(std::string_view text, std::string source_path = "");

// All invariant violations; empty means the set is usable.
std::vector<RuleDiagnostic> ValidateRuleSet(const RuleSet &rules);

// True when every keep clause provably drops at least one matched child.
// Spawn-only rules are shrink-checked at run time instead.
bool ShrinksStatically(const RuleSpec &rule);

// Parse and validate. Throws DslSyntaxError or DslSemanticError.
RuleSet LoadRuleSet(std::string_view text, std::string source_path = "");
RuleSet LoadRuleSetFile(const std::string &path);

// The built-in rule set encoding the twelve simplification rules.
const std::string &DefaultRulesText();

struct Bindings {
  // var -> index of the bound child under the matched node.
  std::vector<std::pair<std::string, int>> vars;
  // [begin, end) child ranges of the pattern's gaps, in pattern order.
  std::vector<std::pair<int, int>> gaps;

  std::optional<int> ChildIndex(std::string_view var) const;
};

struct RewriteOutcome {
  std::vector<PtbTree> revised;  // one per keep clause that survived
  std::vector<PtbTree> spawned;
};

// Matches `rule` at the node at `address`. When gaps allow several
// alignments the leading gap is made as long as possible. Alignments whose
// keep clause would leave the node empty are rejected.
std::optional<Bindings> MatchRule(const RuleSpec &rule, const PtbTree &tree,
                                  const Address &address);

// Same, given the node itself.
std::optional<Bindings> MatchNode(const RuleSpec &rule, const PtbTree &node);

struct NodeRewrite {
  std::vector<PtbTree> replacements;  // new subtree for the matched slot
  std::vector<PtbTree> spawned;
};

// The node-local half of ApplyRule. `tree_tokens` is the source-token count
// of the whole tree; products that would not shrink it are dropped.
NodeRewrite RewriteNode(const RuleSpec &rule, const PtbTree &node,
                        const Bindings &bindings, std::size_t tree_tokens);

// Rewrites a copy of `tree`. A single kept child carrying the matched node's
// tag replaces the node (no unary X-over-X chains). Products whose
// source-token count is not strictly below that of `tree` are dropped, which
// keeps every rewrite strictly shrinking.
RewriteOutcome ApplyRule(const RuleSpec &rule, const PtbTree &tree,
                         const Address &address, const Bindings &bindings);

}  // namespace treesimp

#endif  // TREESIMP_RULES_H_
