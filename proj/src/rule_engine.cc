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

#include <algorithm>

#include "treesimp/rules.h"

namespace treesimp {

namespace {

bool HasTag(const std::vector<std::string> &tags, const std::string &tag) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool ChildHasTag(const PtbTree &node, const std::string &tag) {
  for (const PtbTree &c : node.children()) {
    if (!c.is_leaf() && c.tag() == tag) return true;
  }
  return false;
}

const PtbTree &FirstPreterminal(const PtbTree &node) {
  const PtbTree *cur = &node;
  while (!cur->is_preterminal() && !cur->is_leaf()) cur = &cur->child(0);
  return *cur;
}

bool Holds(const Condition &cond, const PtbTree &target) {
  switch (cond.kind) {
    case Condition::Kind::kContains:
      return std::any_of(cond.tags.begin(), cond.tags.end(),
                         [&](const std::string &t) { return ChildHasTag(target, t); });
    case Condition::Kind::kLacks:
      return std::none_of(cond.tags.begin(), cond.tags.end(),
                          [&](const std::string &t) { return ChildHasTag(target, t); });
    case Condition::Kind::kContainsAll:
      return std::all_of(cond.tags.begin(), cond.tags.end(),
                         [&](const std::string &t) { return ChildHasTag(target, t); });
    case Condition::Kind::kNotAll:
      return !std::all_of(cond.tags.begin(), cond.tags.end(),
                          [&](const std::string &t) { return ChildHasTag(target, t); });
    case Condition::Kind::kFirstLeafPos: {
      const PtbTree &pre = FirstPreterminal(target);
      return !pre.is_leaf() && HasTag(cond.tags, pre.tag());
    }
  }
  return false;
}

std::vector<PtbTree> StripBrackets(const PtbTree &node) {
  if (node.is_preterminal()) return {node};
  std::vector<PtbTree> kept;
  for (const PtbTree &c : node.children()) {
    if (c.is_leaf() || (c.tag() != "-LRB-" && c.tag() != "-RRB-")) {
      kept.push_back(c);
    }
  }
  if (kept.size() <= 1) return kept;
  return {node.WithChildren(std::move(kept))};
}

std::size_t StrippedSize(const PtbTree &node) {
  if (node.is_preterminal()) return 1;
  std::size_t n = 0;
  for (const PtbTree &c : node.children()) {
    if (c.is_leaf() || (c.tag() != "-LRB-" && c.tag() != "-RRB-")) ++n;
  }
  return std::min<std::size_t>(n, 1);
}

PtbTree SubstituteWhnp(const PtbTree &node, const PtbTree &replacement) {
  std::vector<Address> found =
      FindNodes(node, [](const PtbTree &t) { return t.tag() == "WHNP"; });
  if (found.empty()) return node;
  return node.ReplaceAt(found.front(), replacement);
}

// Resolves template items against one match.
class Expander {
 public:
  Expander(const PtbTree &matched, const Bindings &bindings)
      : matched_(matched), bindings_(bindings) {}

  const PtbTree &Bound(const std::string &var) const {
    std::optional<int> i = bindings_.ChildIndex(var);
    if (!i) throw EmptyNode("unbound variable $" + var);
    return matched_.child(*i);
  }

  std::vector<PtbTree> Expand(const std::vector<TemplateItem> &items) const {
    std::vector<PtbTree> out;
    for (const TemplateItem &item : items) {
      switch (item.kind) {
        case TemplateItem::Kind::kRef:
          out.push_back(Bound(item.var));
          break;
        case TemplateItem::Kind::kGap: {
          auto [b, e] = bindings_.gaps.at(item.gap);
          for (int i = b; i < e; ++i) out.push_back(matched_.child(i));
          break;
        }
        case TemplateItem::Kind::kSelf:
          out.push_back(matched_);
          break;
        case TemplateItem::Kind::kScaffold:
          out.push_back(PtbTree::Preterminal(item.tag, item.token, true));
          break;
        case TemplateItem::Kind::kStripBrackets:
          for (PtbTree &t : StripBrackets(Bound(item.var))) {
            out.push_back(std::move(t));
          }
          break;
        case TemplateItem::Kind::kSubstituteWhnp:
          out.push_back(SubstituteWhnp(Bound(item.var), Bound(item.with_var)));
          break;
      }
    }
    return out;
  }

  // Child count a keep clause would produce, without building anything.
  std::size_t KeepSize(const std::vector<TemplateItem> &items) const {
    std::size_t n = 0;
    for (const TemplateItem &item : items) {
      if (item.kind == TemplateItem::Kind::kGap) {
        auto [b, e] = bindings_.gaps.at(item.gap);
        n += static_cast<std::size_t>(e - b);
      } else if (item.kind == TemplateItem::Kind::kStripBrackets) {
        n += StrippedSize(Bound(item.var));
      } else {
        ++n;
      }
    }
    return n;
  }

 private:
  const PtbTree &matched_;
  const Bindings &bindings_;
};

bool ElementMatches(const PatternElement &e, const PtbTree &child,
                    const std::string &parent_tag) {
  if (child.is_leaf()) return false;
  if (e.tag == "^") return child.tag() == parent_tag;
  return child.tag() == e.tag;
}

// Binds the core (non-gap) elements at child offset `pos` and checks the
// rule's conditions and keep sizes.
std::optional<Bindings> TryAlignment(const RuleSpec &rule,
                                     const PtbTree &node, bool leading,
                                     bool trailing, std::size_t core_begin,
                                     std::size_t core_size, std::size_t pos) {
  Bindings b;
  for (std::size_t k = 0; k < core_size; ++k) {
    const PatternElement &e = rule.pattern[core_begin + k];
    const PtbTree &child = node.child(pos + k);
    if (!ElementMatches(e, child, node.tag())) return std::nullopt;
    if (e.kind == PatternElement::Kind::kVar) {
      b.vars.emplace_back(e.var, static_cast<int>(pos + k));
    }
  }
  int n = static_cast<int>(node.num_children());
  if (leading) b.gaps.emplace_back(0, static_cast<int>(pos));
  if (trailing) b.gaps.emplace_back(static_cast<int>(pos + core_size), n);

  for (const Condition &cond : rule.conditions) {
    const PtbTree *target = &node;
    if (!cond.var.empty()) {
      std::optional<int> i = b.ChildIndex(cond.var);
      if (!i) return std::nullopt;
      target = &node.child(*i);
    }
    if (!Holds(cond, *target)) return std::nullopt;
  }
  Expander expander(node, b);
  for (const auto &keep : rule.keep) {
    if (expander.KeepSize(keep) == 0) return std::nullopt;
  }
  return b;
}

PtbTree BuildNode(const NodeLabel &label, std::vector<PtbTree> children) {
  if (children.size() == 1 && !children[0].is_leaf() &&
      children[0].tag() == label.tag) {
    return std::move(children[0]);
  }
  return PtbTree::Internal(label, std::move(children));
}

}  // namespace

std::optional<int> Bindings::ChildIndex(std::string_view var) const {
  for (const auto &[name, index] : vars) {
    if (name == var) return index;
  }
  return std::nullopt;
}

std::optional<Bindings> MatchRule(const RuleSpec &rule, const PtbTree &tree,
                                  const Address &address) {
  return MatchNode(rule, tree.At(address));
}

std::optional<Bindings> MatchNode(const RuleSpec &rule, const PtbTree &node) {
  if (node.is_leaf() || node.is_preterminal()) return std::nullopt;
  if (!rule.MatchesParent(node.tag())) return std::nullopt;

  const auto &pat = rule.pattern;
  bool leading = !pat.empty() && pat.front().kind == PatternElement::Kind::kGap;
  bool trailing = pat.size() > 1 &&
                  pat.back().kind == PatternElement::Kind::kGap;
  std::size_t core_begin = leading ? 1 : 0;
  std::size_t core_size = pat.size() - core_begin - (trailing ? 1 : 0);
  std::size_t n = node.num_children();
  if (core_size > n) return std::nullopt;

  if (!leading && !trailing) {
    if (core_size != n) return std::nullopt;
    return TryAlignment(rule, node, false, false, core_begin, core_size, 0);
  }
  if (!leading) {
    return TryAlignment(rule, node, false, true, core_begin, core_size, 0);
  }
  if (!trailing) {
    return TryAlignment(rule, node, true, false, core_begin, core_size,
                        n - core_size);
  }
  // Both gaps: longest leading gap first.
  for (std::size_t pos = n - core_size + 1; pos-- > 0;) {
    if (auto b = TryAlignment(rule, node, true, true, core_begin, core_size,
                              pos)) {
      return b;
    }
  }
  return std::nullopt;
}

NodeRewrite RewriteNode(const RuleSpec &rule, const PtbTree &node,
                        const Bindings &bindings, std::size_t tree_tokens) {
  Expander expander(node, bindings);
  NodeRewrite out;
  for (const auto &keep : rule.keep) {
    std::vector<PtbTree> children = expander.Expand(keep);
    if (children.empty()) {
      throw EmptyNode("rule '" + rule.name + "' would leave " + node.tag() +
                      " without children");
    }
    PtbTree replacement = BuildNode(node.label(), std::move(children));
    if (replacement.num_source_tokens() < node.num_source_tokens()) {
      out.replacements.push_back(std::move(replacement));
    }
  }
  for (const SpawnTemplate &spawn : rule.spawn) {
    std::vector<PtbTree> children = expander.Expand(spawn.items);
    if (children.empty()) {
      throw EmptyNode("rule '" + rule.name + "' spawns an empty tree");
    }
    PtbTree tree_out =
        BuildNode(NodeLabel::Parse(spawn.root_tag), std::move(children));
    if (tree_out.num_source_tokens() < tree_tokens) {
      out.spawned.push_back(std::move(tree_out));
    }
  }
  return out;
}

RewriteOutcome ApplyRule(const RuleSpec &rule, const PtbTree &tree,
                         const Address &address, const Bindings &bindings) {
  NodeRewrite local = RewriteNode(rule, tree.At(address), bindings,
                                  tree.num_source_tokens());
  RewriteOutcome outcome;
  for (PtbTree &r : local.replacements) {
    outcome.revised.push_back(tree.ReplaceAt(address, std::move(r)));
  }
  outcome.spawned = std::move(local.spawned);
  return outcome;
}

}  // namespace treesimp
