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

// Reference closure used to cross-check the engine.

#ifndef TREESIMP_TESTS_SUPPORT_ORACLE_H_
#define TREESIMP_TESTS_SUPPORT_ORACLE_H_

#include <set>
#include <string>

#include "treesimp/rules.h"
#include "treesimp/simplifier.h"
#include "treesimp/tree.h"

namespace treesimp::testing {

// Canonical serializations of every tree the rules can derive. Bases are
// the necessary-rule normal forms reachable from `tree` by rewriting at any
// node in any order; the result adds everything reachable from the bases by
// optional rules. Every rule is tried at every node of every member until
// no new string appears. No caps.
std::set<std::string> OracleClosure(const PtbTree &tree, const RuleSet &rules,
                                    const EngineOptions &options = {});

}  // namespace treesimp::testing

#endif  // TREESIMP_TESTS_SUPPORT_ORACLE_H_
