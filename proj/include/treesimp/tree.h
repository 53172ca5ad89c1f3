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

#ifndef TREESIMP_TREE_H_
#define TREESIMP_TREE_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treesimp {

// Phrase or POS label. Only `tag` takes part in matching; the function
// suffix ("-SBJ", "=2", ...) is carried along so trees round-trip.
struct NodeLabel {
  std::string tag;
  std::string function_suffix;

  // Splits a raw PTB label at the first '-' or '=' past position 0.
  // Labels starting with '-' (-LRB-, -NONE-) are taken whole.
  static NodeLabel Parse(std::string_view raw);

  std::string ToString() const { return tag + function_suffix; }

  bool IsClause() const;
  bool IsParticiple() const;
  bool IsNominalHeadTag() const;
  bool IsDeterminativeOrNumeral() const;

  friend bool operator==(const NodeLabel &, const NodeLabel &) = default;
};

// Root-to-node child-index path. The empty address is the root.
using Address = std::vector<int>;

std::string AddressToString(const Address &address);

// Immutable labeled ordered tree with structural sharing. Copies are cheap
// (one shared_ptr); rewrites return new trees that share every untouched
// subtree with the original.
class PtbTree {
 public:
  static PtbTree Leaf(std::string token, bool scaffold = false);
  static PtbTree Internal(NodeLabel label, std::vector<PtbTree> children);
  static PtbTree Internal(std::string_view label,
                          std::vector<PtbTree> children);
  static PtbTree Preterminal(std::string_view tag, std::string token,
                             bool scaffold = false);

  bool is_leaf() const;
  bool is_preterminal() const;

  const NodeLabel &label() const;
  const std::string &tag() const { return label().tag; }
  const std::string &token() const;

  // Leaves inserted by a rule template rather than copied from the input.
  bool scaffold() const;

  std::span<const PtbTree> children() const;
  const PtbTree &child(std::size_t i) const { return children()[i]; }
  std::size_t num_children() const { return children().size(); }

  std::size_t num_leaves() const;
  // Leaves excluding scaffold tokens.
  std::size_t num_source_tokens() const;
  std::size_t num_nodes() const;

  // Structural hash; ignores the scaffold flag, like operator==.
  std::size_t hash() const;

  // Throws std::out_of_range for an address that leaves the tree.
  const PtbTree &At(const Address &address) const;
  bool Contains(const Address &address) const;

  // Copy of this tree with the node at `address` replaced. Only the path
  // from the root to `address` is rebuilt.
  PtbTree ReplaceAt(const Address &address, PtbTree replacement) const;

  // Hash of ReplaceAt(address, replacement), computed without building it.
  std::size_t HashWithReplacement(const Address &address,
                                  const PtbTree &replacement) const;

  // Whether `other` equals ReplaceAt(address, replacement). Builds nothing;
  // `address` must be valid in this tree.
  bool EqualsWithReplacement(const Address &address, const PtbTree &replacement,
                             const PtbTree &other) const;

  // Same label, new children.
  PtbTree WithChildren(std::vector<PtbTree> children) const;

  // True if both handles point at the same node object.
  bool SameNode(const PtbTree &other) const { return node_ == other.node_; }

  friend bool operator==(const PtbTree &a, const PtbTree &b);

 private:
  struct Node;
  explicit PtbTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static PtbTree Build(NodeLabel label, std::size_t label_hash,
                       std::vector<PtbTree> children);
  PtbTree ReplaceAtImpl(const Address &address, std::size_t depth,
                        PtbTree replacement) const;

  std::shared_ptr<const Node> node_;
};

struct PtbTreeHash {
  std::size_t operator()(const PtbTree &t) const { return t.hash(); }
};

// Visits internal nodes (leaves are skipped) in depth-first pre-order.
void ForEachNode(
    const PtbTree &tree,
    const std::function<void(const PtbTree &, const Address &)> &visit);

// Addresses of internal nodes satisfying `predicate`, in depth-first
// pre-order.
std::vector<Address> FindNodes(
    const PtbTree &tree, const std::function<bool(const PtbTree &)> &predicate);

// Left-to-right leaf tokens.
std::vector<std::string> YieldTokens(const PtbTree &tree);

}  // namespace treesimp

#endif  // TREESIMP_TREE_H_
