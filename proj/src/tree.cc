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

#include "treesimp/tree.h"

#include <stdexcept>
#include <utility>

namespace treesimp {

namespace {

std::size_t Mix(std::size_t seed, std::size_t value) {
  // boost::hash_combine with a 64-bit constant.
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const NodeLabel &EmptyLabel() {
  static const NodeLabel kEmpty;
  return kEmpty;
}

const std::string &EmptyString() {
  static const std::string kEmpty;
  return kEmpty;
}

}  // namespace

NodeLabel NodeLabel::Parse(std::string_view raw) {
  NodeLabel label;
  if (raw.empty() || raw.front() == '-') {
    label.tag = std::string(raw);
    return label;
  }
  std::size_t cut = raw.find_first_of("-=", 1);
  if (cut == std::string_view::npos) {
    label.tag = std::string(raw);
  } else {
    label.tag = std::string(raw.substr(0, cut));
    label.function_suffix = std::string(raw.substr(cut));
  }
  return label;
}

bool NodeLabel::IsClause() const {
  return tag == "S" || tag == "SBAR" || tag == "SBARQ" || tag == "SINV" ||
         tag == "SQ";
}

bool NodeLabel::IsParticiple() const { return tag == "VBG" || tag == "VBN"; }

bool NodeLabel::IsNominalHeadTag() const {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool NodeLabel::IsDeterminativeOrNumeral() const {
  return tag == "DT" || tag == "CD" || tag == "PDT";
}

std::string AddressToString(const Address &address) {
  std::string out = "[";
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(address[i]);
  }
  out += ']';
  return out;
}

struct PtbTree::Node {
  NodeLabel label;
  std::string token;
  std::vector<PtbTree> children;
  bool scaffold = false;
  std::size_t label_hash = 0;
  std::size_t hash = 0;
  std::size_t leaves = 0;
  std::size_t source_tokens = 0;
  std::size_t nodes = 1;
};

PtbTree PtbTree::Leaf(std::string token, bool scaffold) {
  if (token.empty()) throw std::invalid_argument("empty leaf token");
  auto node = std::make_shared<Node>();
  node->hash = Mix(0x51ed270b, std::hash<std::string>()(token));
  node->token = std::move(token);
  node->scaffold = scaffold;
  node->leaves = 1;
  node->source_tokens = scaffold ? 0 : 1;
  return PtbTree(std::move(node));
}

PtbTree PtbTree::Internal(NodeLabel label, std::vector<PtbTree> children) {
  if (children.empty()) {
    throw std::invalid_argument("internal node '" + label.ToString() +
                                "' has no children");
  }
  std::size_t h = Mix(0x2545f491, std::hash<std::string>()(label.tag));
  h = Mix(h, std::hash<std::string>()(label.function_suffix));
  return Build(std::move(label), h, std::move(children));
}

PtbTree PtbTree::Build(NodeLabel label, std::size_t label_hash,
                       std::vector<PtbTree> children) {
  auto node = std::make_shared<Node>();
  node->label_hash = label_hash;
  std::size_t h = label_hash;
  for (const PtbTree &c : children) {
    h = Mix(h, c.hash());
    node->leaves += c.node_->leaves;
    node->source_tokens += c.node_->source_tokens;
    node->nodes += c.node_->nodes;
  }
  node->hash = Mix(h, children.size());
  node->label = std::move(label);
  node->children = std::move(children);
  return PtbTree(std::move(node));
}

PtbTree PtbTree::Internal(std::string_view label,
                          std::vector<PtbTree> children) {
  return Internal(NodeLabel::Parse(label), std::move(children));
}

PtbTree PtbTree::Preterminal(std::string_view tag, std::string token,
                             bool scaffold) {
  return Internal(NodeLabel::Parse(tag), {Leaf(std::move(token), scaffold)});
}

bool PtbTree::is_leaf() const { return node_->children.empty(); }

bool PtbTree::is_preterminal() const {
  return node_->children.size() == 1 && node_->children[0].is_leaf();
}

const NodeLabel &PtbTree::label() const {
  return is_leaf() ? EmptyLabel() : node_->label;
}

const std::string &PtbTree::token() const {
  return is_leaf() ? node_->token : EmptyString();
}

bool PtbTree::scaffold() const { return node_->scaffold; }

std::span<const PtbTree> PtbTree::children() const {
  return {node_->children.data(), node_->children.size()};
}

std::size_t PtbTree::num_leaves() const { return node_->leaves; }
std::size_t PtbTree::num_source_tokens() const { return node_->source_tokens; }
std::size_t PtbTree::num_nodes() const { return node_->nodes; }
std::size_t PtbTree::hash() const { return node_->hash; }

const PtbTree &PtbTree::At(const Address &address) const {
  const PtbTree *cur = this;
  for (int i : address) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->num_children()) {
      throw std::out_of_range("address " + AddressToString(address) +
                              " is not in the tree");
    }
    cur = &cur->child(i);
  }
  return *cur;
}

bool PtbTree::Contains(const Address &address) const {
  const PtbTree *cur = this;
  for (int i : address) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->num_children()) {
      return false;
    }
    cur = &cur->child(i);
  }
  return true;
}

PtbTree PtbTree::ReplaceAt(const Address &address, PtbTree replacement) const {
  if (!Contains(address)) {
    throw std::out_of_range("address " + AddressToString(address) +
                            " is not in the tree");
  }
  return ReplaceAtImpl(address, 0, std::move(replacement));
}

PtbTree PtbTree::ReplaceAtImpl(const Address &address, std::size_t depth,
                               PtbTree replacement) const {
  if (depth == address.size()) return replacement;
  std::vector<PtbTree> children(node_->children);
  int i = address[depth];
  children[i] = children[i].ReplaceAtImpl(address, depth + 1,
                                          std::move(replacement));
  return Build(node_->label, node_->label_hash, std::move(children));
}

std::size_t PtbTree::HashWithReplacement(const Address &address,
                                         const PtbTree &replacement) const {
  std::vector<const Node *> path;
  path.reserve(address.size());
  const PtbTree *cur = this;
  for (int i : address) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->num_children()) {
      throw std::out_of_range("address " + AddressToString(address) +
                              " is not in the tree");
    }
    path.push_back(cur->node_.get());
    cur = &cur->child(i);
  }
  std::size_t h = replacement.hash();
  for (std::size_t d = path.size(); d-- > 0;) {
    const Node &n = *path[d];
    std::size_t acc = n.label_hash;
    for (std::size_t c = 0; c < n.children.size(); ++c) {
      acc = Mix(acc, static_cast<int>(c) == address[d] ? h
                                                      : n.children[c].hash());
    }
    h = Mix(acc, n.children.size());
  }
  return h;
}

bool PtbTree::EqualsWithReplacement(const Address &address,
                                    const PtbTree &replacement,
                                    const PtbTree &other) const {
  const PtbTree *x = this;
  const PtbTree *y = &other;
  for (int i : address) {
    const Node &a = *x->node_;
    const Node &b = *y->node_;
    if (a.children.size() != b.children.size() || b.children.empty() ||
        a.label_hash != b.label_hash || !(a.label == b.label)) {
      return false;
    }
    for (std::size_t c = 0; c < a.children.size(); ++c) {
      if (static_cast<int>(c) != i && !(a.children[c] == b.children[c])) {
        return false;
      }
    }
    x = &a.children[i];
    y = &b.children[i];
  }
  return replacement == *y;
}

PtbTree PtbTree::WithChildren(std::vector<PtbTree> children) const {
  return Internal(label(), std::move(children));
}

bool operator==(const PtbTree &a, const PtbTree &b) {
  if (a.node_ == b.node_) return true;
  const PtbTree::Node &x = *a.node_;
  const PtbTree::Node &y = *b.node_;
  if (x.hash != y.hash || x.leaves != y.leaves || x.nodes != y.nodes) {
    return false;
  }
  if (x.children.size() != y.children.size()) return false;
  if (x.children.empty()) return x.token == y.token;
  if (!(x.label == y.label)) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

namespace {

void Visit(const PtbTree &tree, Address &address,
           const std::function<void(const PtbTree &, const Address &)> &fn) {
  if (tree.is_leaf()) return;
  fn(tree, address);
  for (std::size_t i = 0; i < tree.num_children(); ++i) {
    address.push_back(static_cast<int>(i));
    Visit(tree.child(i), address, fn);
    address.pop_back();
  }
}

void CollectTokens(const PtbTree &tree, std::vector<std::string> &out) {
  if (tree.is_leaf()) {
    out.push_back(tree.token());
    return;
  }
  for (const PtbTree &c : tree.children()) CollectTokens(c, out);
}

}  // namespace

void ForEachNode(
    const PtbTree &tree,
    const std::function<void(const PtbTree &, const Address &)> &visit) {
  Address address;
  Visit(tree, address, visit);
}

std::vector<Address> FindNodes(
    const PtbTree &tree,
    const std::function<bool(const PtbTree &)> &predicate) {
  std::vector<Address> found;
  ForEachNode(tree, [&](const PtbTree &node, const Address &address) {
    if (predicate(node)) found.push_back(address);
  });
  return found;
}

std::vector<std::string> YieldTokens(const PtbTree &tree) {
  std::vector<std::string> tokens;
  tokens.reserve(tree.num_leaves());
  CollectTokens(tree, tokens);
  return tokens;
}

}  // namespace treesimp
