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

#include <set>
#include <unordered_set>

#include "doctest.h"
#include "support/generators.h"
#include "treesimp/ptb.h"
#include "treesimp/tree.h"

namespace treesimp {
namespace {

using testing::RandomPtbTree;
using testing::Rng;

TEST_CASE("label parsing splits function suffixes") {
  NodeLabel l = NodeLabel::Parse("NP-SBJ");
  CHECK(l.tag == "NP");
  CHECK(l.function_suffix == "-SBJ");
  CHECK(l.ToString() == "NP-SBJ");
  CHECK(NodeLabel::Parse("PP=2").tag == "PP");
  CHECK(NodeLabel::Parse("-LRB-").tag == "-LRB-");
  CHECK(NodeLabel::Parse("-NONE-").tag == "-NONE-");
  CHECK(NodeLabel::Parse(",").tag == ",");
}

TEST_CASE("label classes") {
  for (const char *t : {"S", "SBAR", "SBARQ", "SINV", "SQ"}) {
    CHECK(NodeLabel::Parse(t).IsClause());
  }
  CHECK_FALSE(NodeLabel::Parse("NP").IsClause());
  CHECK(NodeLabel::Parse("VBG").IsParticiple());
  CHECK(NodeLabel::Parse("VBN").IsParticiple());
  CHECK_FALSE(NodeLabel::Parse("VBZ").IsParticiple());
  for (const char *t : {"NN", "NNS", "NNP", "NNPS"}) {
    CHECK(NodeLabel::Parse(t).IsNominalHeadTag());
  }
  CHECK_FALSE(NodeLabel::Parse("PRP").IsNominalHeadTag());
  for (const char *t : {"DT", "CD", "PDT"}) {
    CHECK(NodeLabel::Parse(t).IsDeterminativeOrNumeral());
  }
  CHECK_FALSE(NodeLabel::Parse("JJ").IsDeterminativeOrNumeral());
}

TEST_CASE("counts and preterminals") {
  PtbTree t = ParsePtb("(S (NP (DT the) (NN role)) (VP (VBZ binds)))");
  CHECK(t.num_leaves() == 3);
  CHECK(t.num_source_tokens() == 3);
  CHECK(t.num_nodes() == 9);
  CHECK(t.child(0).child(0).is_preterminal());
  CHECK_FALSE(t.child(0).is_preterminal());
  CHECK(t.child(0).child(0).child(0).is_leaf());

  PtbTree s = PtbTree::Internal(
      "S", {t.child(0), PtbTree::Preterminal("MD", "can", true)});
  CHECK(s.num_leaves() == 3);
  CHECK(s.num_source_tokens() == 2);
}

TEST_CASE("find_nodes returns pre-order addresses") {
  PtbTree t = ParsePtb("(S (NP (DT a) (NN b)) (VP (VBZ c) (NP (NN d))))");
  auto nps = FindNodes(t, [](const PtbTree &n) { return n.tag() == "NP"; });
  CHECK(nps == std::vector<Address>{Address{0}, Address{1, 1}});
  CHECK(FindNodes(t, [](const PtbTree &) { return false; }).empty());

  PtbTree nested = ParsePtb("(S (SBAR (IN if) (S (NP (NN x)) (VP (VBZ y)))))");
  auto clauses =
      FindNodes(nested, [](const PtbTree &n) { return n.label().IsClause(); });
  CHECK(clauses == std::vector<Address>{Address{}, Address{0}, Address{0, 1}});
}

TEST_CASE("At and ReplaceAt") {
  PtbTree t = ParsePtb("(S (NP (DT a) (NN b)) (VP (VBZ c) (NP (NN d))))");
  CHECK(t.At({1, 1}).tag() == "NP");
  CHECK_THROWS_AS(t.At({5}), std::out_of_range);
  CHECK_THROWS_AS(t.At({0, 0, 0, 0}), std::out_of_range);
  CHECK(t.Contains({1, 0}));
  CHECK_FALSE(t.Contains({2}));

  PtbTree r = t.ReplaceAt({1, 1}, ParsePtb("(NP (NN e))"));
  CHECK(Serialize(r) == "(S (NP (DT a) (NN b)) (VP (VBZ c) (NP (NN e))))");
  CHECK(Serialize(t) == "(S (NP (DT a) (NN b)) (VP (VBZ c) (NP (NN d))))");
  // Untouched subtrees are shared, not copied.
  CHECK(r.child(0).SameNode(t.child(0)));
  CHECK(r.child(1).child(0).SameNode(t.child(1).child(0)));
  CHECK(t.ReplaceAt({}, r) == r);
}

TEST_CASE("yield_tokens") {
  CHECK(YieldTokens(ParsePtb("(S (NP (DT the) (NN role)))")) ==
        std::vector<std::string>{"the", "role"});
  CHECK(YieldTokens(ParsePtb("(NN ligand)")) == std::vector<std::string>{"ligand"});
}

TEST_CASE("property: hash and equality agree with serialization") {
  Rng rng(1234);
  std::vector<PtbTree> trees;
  for (int i = 0; i < 400; ++i) trees.push_back(RandomPtbTree(rng, 1 + i % 4));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    PtbTree reparsed = ParsePtb(Serialize(trees[i]));
    CHECK(reparsed == trees[i]);
    CHECK(reparsed.hash() == trees[i].hash());
    for (std::size_t j = i + 1; j < std::min(trees.size(), i + 40); ++j) {
      bool same_text = Serialize(trees[i]) == Serialize(trees[j]);
      CHECK((trees[i] == trees[j]) == same_text);
      if (same_text) CHECK(trees[i].hash() == trees[j].hash());
    }
  }
}

TEST_CASE("scaffold flag does not affect identity") {
  PtbTree a = PtbTree::Preterminal("MD", "can", true);
  PtbTree b = PtbTree::Preterminal("MD", "can", false);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.num_source_tokens() == 0);
  CHECK(b.num_source_tokens() == 1);
}

}  // namespace
}  // namespace treesimp
