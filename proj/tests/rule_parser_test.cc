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


#include <string>

#include "doctest.h"
#include "support/golden.h"
#include "treesimp/rules.h"

namespace treesimp {
namespace {

bool Mentions(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_CASE("shipped rule file loads twelve rules in table order") {
  RuleSet rules = LoadRuleSetFile(testing::SourcePath("rules/table2.rules"));
  const char *kOrder[] = {
      "simple_sentence",   "np_vp_postmod",   "np_adjp_postmod",
      "np_pp_postmod",     "vp_md_postmod",   "vp_pp_postmod",
      "abbreviation",      "section_indicator", "content_clause",
      "rel_clause_sep",    "rel_clause_removal", "coordination"};
  REQUIRE(rules.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(rules.rules[i].name == kOrder[i]);
  CHECK(ValidateRuleSet(rules).empty());
}

TEST_CASE("built-in text matches the shipped file") {
  CHECK(DefaultRulesText() ==
        testing::ReadFile(testing::SourcePath("rules/table2.rules")));
}

TEST_CASE("necessary rules are the abbreviation and section indicator") {
  RuleSet rules = LoadRuleSet(DefaultRulesText());
  for (const RuleSpec &r : rules.rules) {
    bool necessary = r.name == "abbreviation" || r.name == "section_indicator";
    CHECK((r.mode == RuleMode::kNecessary) == necessary);
  }
}

TEST_CASE("parsed structure of a rule") {
  RuleSet rules = LoadRuleSet(R"(
# comment
rule np_vp_postmod  mode=optional tags=(a b)
  match NP [ $a:NP $v:VP ]
  where first_pos($v) in {VBG VBN}
  keep  [ $a ]
  spawn { S: $a lit(MD,"can") lit(VB,"be") $v }
)");
  const RuleSpec &r = rules.rules.at(0);
  CHECK(r.line == 3);
  CHECK(r.tags == std::set<std::string>{"a", "b"});
  CHECK(r.parent_tags == std::vector<std::string>{"NP"});
  REQUIRE(r.pattern.size() == 2);
  CHECK(r.pattern[1].var == "v");
  CHECK(r.pattern[1].tag == "VP");
  REQUIRE(r.conditions.size() == 1);
  CHECK(r.conditions[0].kind == Condition::Kind::kFirstLeafPos);
  CHECK(r.conditions[0].tags == std::vector<std::string>{"VBG", "VBN"});
  REQUIRE(r.spawn.size() == 1);
  CHECK(r.spawn[0].root_tag == "S");
  REQUIRE(r.spawn[0].items.size() == 4);
  CHECK(r.spawn[0].items[1].kind == TemplateItem::Kind::kScaffold);
  CHECK(r.spawn[0].items[1].token == "can");
  CHECK(ShrinksStatically(r));
}

TEST_CASE("empty rule set is a semantic error") {
  CHECK_THROWS_AS(LoadRuleSet(""), DslSemanticError);
  CHECK_THROWS_AS(LoadRuleSet("# only a comment\n"), DslSemanticError);
}

TEST_CASE("unbound variable is named") {
  const char *text = R"(rule r1 mode=optional tags=()
  match NP [ $a:NP $p:PP ]
  keep  [ $a ]
  spawn { S: $x }
  del   { $p }
)";
  try {
    LoadRuleSet(text);
    FAIL("expected DslSemanticError");
  } catch (const DslSemanticError &e) {
    CHECK(Mentions(e.what(), "$x"));
  }
}

TEST_CASE("unpartitioned child is reported") {
  RuleSet rules = ParseRuleSet(R"(rule r1 mode=optional tags=()
  match NP [ $a:NP $p:PP $q:PP ]
  keep  [ $a ]
  del   { $p }
)");
  auto diags = ValidateRuleSet(rules);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].check == RuleDiagnostic::Check::kPartition);
  CHECK(Mentions(diags[0].message, "$q"));
}

TEST_CASE("duplicate names are rejected") {
  const char *text = R"(rule r1 mode=optional tags=()
  match NP [ $a:NP $p:PP ]
  keep  [ $a ]
  del   { $p }
rule r1 mode=optional tags=()
  match VP [ $a:VP $p:PP ]
  keep  [ $a ]
  del   { $p }
)";
  CHECK_THROWS_AS(LoadRuleSet(text), DslSemanticError);
}

TEST_CASE("a keep that retains every child cannot shrink") {
  RuleSet rules = ParseRuleSet(R"(rule grow mode=optional tags=()
  match NP [ $a:NP $p:PP ]
  keep  [ $a $p ]
)");
  CHECK_FALSE(ShrinksStatically(rules.rules[0]));
  bool found = false;
  for (const auto &d : ValidateRuleSet(rules)) {
    found |= d.check == RuleDiagnostic::Check::kShrinking;
  }
  CHECK(found);
}

TEST_CASE("syntax errors carry the line") {
  const char *text = "rule ok mode=optional tags=()\n"
                     "  match NP [ $a:NP $p:PP ]\n"
                     "  keep [ $a\n";
  try {
    ParseRuleSet(text);
    FAIL("expected DslSyntaxError");
  } catch (const DslSyntaxError &e) {
    CHECK(e.line() == 3);
  }
  try {
    ParseRuleSet("\nrule r mode=sometimes tags=()\n");
    FAIL("expected DslSyntaxError");
  } catch (const DslSyntaxError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseRuleSet("match NP [ $a:NP ]\n"), DslSyntaxError);
}

TEST_CASE("file loader reports missing files") {
  CHECK_THROWS(LoadRuleSetFile("/nonexistent/x.rules"));
}

}  // namespace
}  // namespace treesimp
