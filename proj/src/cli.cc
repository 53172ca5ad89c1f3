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

#include "treesimp/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "treesimp/ptb.h"
#include "treesimp/rules.h"
#include "treesimp/simplifier.h"
#include "treesimp/synthetic.h"

namespace treesimp {

namespace {

using Json = nlohmann::ordered_json;

struct SimplifyArgs {
  std::string rules;
  std::string input;
  std::string format = "jsonl";
  bool np_replace = false;
  bool echo_input = false;
  bool no_base = false;
  std::vector<std::string> tags;
  std::size_t max_generated = 512;
  std::size_t max_steps = 10000;
  std::string stats;
  bool collapse = false;
  std::string input_format = "auto";
  unsigned jobs = 1;
};

struct BenchArgs {
  std::string rules;
  std::vector<int> sizes = {10, 20, 40, 80, 160, 320};
  std::uint64_t seed = 7;
  int per_size = 15;
  int repeats = 3;
  std::string emit_corpus;
};

bool ReadAll(const std::string &path, std::string *out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  out->assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  return true;
}

Json ProvenanceJson(const std::vector<RuleFiring> &prov) {
  Json arr = Json::array();
  for (const RuleFiring &f : prov) {
    arr.push_back({{"rule", f.rule}, {"path", f.address}});
  }
  return arr;
}

Json ErrorJson(std::size_t id, std::string_view kind, const std::string &msg) {
  return {{"id", id}, {"error", {{"kind", kind}, {"message", msg}}}};
}

int CmdSimplify(const SimplifyArgs &a, std::istream &in, std::ostream &out,
                std::ostream &err) {
  RuleSet rules;
  try {
    rules = LoadRuleSetFile(a.rules);
  } catch (const std::exception &e) {
    err << "treesimp: " << a.rules << ": " << e.what() << "\n";
    return kExitFatal;
  }

  std::string text;
  if (a.input.empty() || a.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (!ReadAll(a.input, &text)) {
    err << "treesimp: cannot read input '" << a.input << "'\n";
    return kExitFatal;
  }

  EngineOptions options;
  options.np_replace = a.np_replace;
  options.emit_original = !a.no_base;
  options.max_generated = a.max_generated;
  options.max_steps = a.max_steps;
  if (!a.tags.empty()) {
    options.rule_tag_filter = std::set<std::string>(a.tags.begin(), a.tags.end());
  }
  try {
    options.Validate();
  } catch (const std::exception &e) {
    err << "treesimp: " << e.what() << "\n";
    return kExitFatal;
  }

  InputFormat format = a.input_format == "line"    ? InputFormat::kLine
                       : a.input_format == "block" ? InputFormat::kBlock
                                                   : InputFormat::kAuto;
  std::vector<CorpusItem> items = ReadCorpus(text, format);

  std::vector<PtbTree> trees;
  std::vector<std::size_t> tree_of(items.size(), SIZE_MAX);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].tree) {
      tree_of[i] = trees.size();
      trees.push_back(*items[i].tree);
    }
  }
  std::vector<SimplificationResult> results =
      SimplifyBatch(trees, rules, options, std::max(1u, a.jobs));

  bool item_errors = false;
  std::size_t outputs_total = 0, tokens_in = 0;
  std::map<std::size_t, std::size_t> histogram;
  std::map<std::string, std::size_t> fire_counts;
  Json wall = Json::array();

  for (std::size_t i = 0; i < items.size(); ++i) {
    if (a.format == "sentences" && i > 0) out << "\n";
    if (tree_of[i] == SIZE_MAX) {
      item_errors = true;
      if (a.format == "jsonl") {
        out << ErrorJson(i, "MalformedTree", items[i].error).dump() << "\n";
      } else {
        err << "treesimp: input " << i << ": " << items[i].error << "\n";
      }
      continue;
    }
    const PtbTree &input = trees[tree_of[i]];
    const SimplificationResult &r = results[tree_of[i]];
    tokens_in += input.num_source_tokens();
    wall.push_back(r.seconds);

    if (a.echo_input) {
      if (a.format == "jsonl") {
        out << Json{{"id", i},
                    {"input", Serialize(input)},
                    {"sentence", RenderSentence(input)}}
                   .dump()
            << "\n";
      } else if (a.format == "trees") {
        out << Serialize(input) << "\n";
      } else {
        out << RenderSentence(input) << "\n";
      }
    }

    std::set<std::string> seen;
    std::size_t emitted = 0;
    for (const SimplifiedSentence &s : r.outputs) {
      if (a.collapse && !seen.insert(s.sentence).second) continue;
      ++emitted;
      if (a.format == "jsonl") {
        Json rec = {{"id", i},
                    {"sentence", s.sentence},
                    {"tree", Serialize(s.tree)},
                    {"provenance", ProvenanceJson(s.provenance)},
                    {"tokenCount", s.token_count},
                    {"isBase", s.is_base}};
        out << rec.dump() << "\n";
      } else if (a.format == "trees") {
        out << Serialize(s.tree) << "\n";
      } else {
        out << s.sentence << "\n";
      }
    }
    outputs_total += emitted;
    ++histogram[emitted];
    for (const auto &[rule, n] : r.rule_fire_counts) fire_counts[rule] += n;

    if (r.error) {
      item_errors = true;
      std::string kind(EngineErrorName(r.error->kind));
      if (a.format == "jsonl") {
        out << ErrorJson(i, kind, r.error->message).dump() << "\n";
      } else {
        err << "treesimp: input " << i << ": " << kind << ": "
            << r.error->message << "\n";
      }
    }
  }
  out.flush();

  if (!a.stats.empty()) {
    Json hist = Json::object();
    for (const auto &[k, v] : histogram) hist[std::to_string(k)] = v;
    Json fires = Json::object();
    for (const RuleSpec &rule : rules.rules) fires[rule.name] = 0;
    for (const auto &[k, v] : fire_counts) fires[k] = v;
    Json stats = {{"sentencesIn", items.size()},
                  {"outputsTotal", outputs_total},
                  {"outputsPerSentence", hist},
                  {"ruleFireCounts", fires},
                  {"tokensIn", tokens_in},
                  {"rulesLoaded", rules.size()},
                  {"wallTimePerSentence", wall}};
    std::ofstream f(a.stats);
    if (!f || !(f << stats.dump(2) << "\n")) {
      err << "treesimp: cannot write stats to '" << a.stats << "'\n";
      return kExitFatal;
    }
  }
  return item_errors ? kExitItemErrors : kExitOk;
}

std::string TagList(const std::set<std::string> &tags) {
  std::string s = "(";
  for (const std::string &t : tags) {
    if (s.size() > 1) s += ' ';
    s += t;
  }
  return s + ")";
}

int CmdValidateRules(const std::string &path, std::ostream &out,
                     std::ostream &err) {
  std::string text;
  if (!ReadAll(path, &text)) {
    err << "treesimp: cannot read rules file '" << path << "'\n";
    return kExitFatal;
  }
  RuleSet rules;
  try {
    rules = ParseRuleSet(text, path);
  } catch (const DslSyntaxError &e) {
    err << path << ": syntax error: " << e.what() << "\n";
    return kExitFatal;
  }
  std::vector<RuleDiagnostic> diags = ValidateRuleSet(rules);
  std::map<std::string, std::vector<const RuleDiagnostic *>> by_rule;
  for (const RuleDiagnostic &d : diags) by_rule[d.rule].push_back(&d);

  auto status = [&](const std::string &rule, RuleDiagnostic::Check check) {
    for (const RuleDiagnostic *d : by_rule[rule]) {
      if (d->check == check) return "FAIL";
    }
    return "ok";
  };

  std::size_t ok = 0;
  for (const RuleSpec &rule : rules.rules) {
    bool clean = by_rule[rule.name].empty();
    ok += clean;
    std::string shrink = status(rule.name, RuleDiagnostic::Check::kShrinking);
    if (shrink == "ok" && rule.keep.empty()) shrink = "runtime";
    out << std::left << std::setw(20) << rule.name << " mode="
        << std::setw(9) << RuleModeName(rule.mode)
        << " tags=" << std::setw(22) << TagList(rule.tags)
        << " partition=" << std::setw(4)
        << status(rule.name, RuleDiagnostic::Check::kPartition)
        << " shrinking=" << std::setw(7) << shrink << " "
        << (clean ? "OK" : "FAIL") << "\n";
  }
  for (const RuleDiagnostic &d : diags) err << path << ": " << d.ToString() << "\n";
  if (diags.empty()) {
    out << rules.size() << " rules OK\n";
    return kExitOk;
  }
  out << ok << " of " << rules.size() << " rules OK, " << diags.size()
      << " problem(s)\n";
  return kExitFatal;
}

int CmdBench(const BenchArgs &a, std::ostream &out, std::ostream &err) {
  RuleSet rules;
  try {
    rules = a.rules.empty() ? LoadRuleSet(DefaultRulesText(), "<built-in>")
                            : LoadRuleSetFile(a.rules);
  } catch (const std::exception &e) {
    err << "treesimp: " << e.what() << "\n";
    return kExitFatal;
  }
  BenchOptions options;
  options.sizes = a.sizes;
  options.seed = a.seed;
  options.per_size = a.per_size;
  options.repeats = a.repeats;
  for (int n : options.sizes) {
    if (n < 7) {
      err << "treesimp: bench sizes must be at least 7 tokens\n";
      return kExitFatal;
    }
  }

  if (!a.emit_corpus.empty()) {
    std::ofstream f(a.emit_corpus);
    for (const auto &trees : BenchCorpus(options)) {
      for (const PtbTree &t : trees) f << Serialize(t) << "\n";
    }
    if (!f) {
      err << "treesimp: cannot write corpus to '" << a.emit_corpus << "'\n";
      return kExitFatal;
    }
  }

  BenchReport report;
  try {
    report = RunBench(rules, options);
  } catch (const std::exception &e) {
    err << "treesimp: " << e.what() << "\n";
    return kExitFatal;
  }
  out << "rules " << rules.size() << ", seed " << a.seed << ", "
      << a.per_size << " trees per size\n";
  out << std::left << std::setw(8) << "tokens" << std::setw(14)
      << "median_ms" << "mean_outputs\n";
  for (const BenchRow &row : report.rows) {
    std::ostringstream ms, outs;
    ms << std::fixed << std::setprecision(4) << row.median_seconds * 1e3;
    outs << std::fixed << std::setprecision(1) << row.mean_outputs;
    out << std::setw(8) << row.tokens << std::setw(14) << ms.str()
        << outs.str() << "\n";
  }
  out << std::fixed << std::setprecision(3)
      << "fitted exponent: " << report.fit.exponent
      << " (least squares, log median time vs log tokens)\n"
      << "reference: worst case O(n^2 * R) is exponent 2; average case "
         "O(n log n * R) is not gated\n"
      << "total seconds: " << report.total_seconds << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err) {
  CLI::App app{"Rule-driven exhaustive sentence simplification over PTB trees",
               "treesimp"};
  app.require_subcommand(1);

  SimplifyArgs sa;
  CLI::App *simplify = app.add_subcommand(
      "simplify", "Simplify trees read from a file or standard input");
  simplify->add_option("--rules", sa.rules, "Rule DSL file")->required();
  simplify->add_option("input", sa.input, "Input file (default: stdin)");
  simplify->add_option("--format", sa.format, "Output format")
      ->check(CLI::IsMember({"sentences", "trees", "jsonl"}));
  simplify->add_flag("--np-replace", sa.np_replace,
                     "Strip base-NP premodifiers first");
  simplify->add_flag("--echo-input", sa.echo_input,
                     "Emit the raw input before its outputs");
  simplify->add_flag("--no-base", sa.no_base, "Do not emit the base sentence");
  simplify->add_option("--tags", sa.tags, "Run only rules with these tags")
      ->delimiter(',');
  simplify->add_option("--max-generated", sa.max_generated,
                       "Cap on trees per sentence")
      ->check(CLI::PositiveNumber);
  simplify->add_option("--max-steps", sa.max_steps,
                       "Cap on rule applications per sentence")
      ->check(CLI::PositiveNumber);
  simplify->add_option("--stats", sa.stats, "Write run statistics JSON here");
  simplify->add_flag("--collapse-duplicates", sa.collapse,
                     "Drop outputs whose sentence text repeats");
  simplify->add_option("--input-format", sa.input_format, "Input layout")
      ->check(CLI::IsMember({"auto", "line", "block"}));
  simplify->add_option("--jobs", sa.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string rules_path;
  CLI::App *validate = app.add_subcommand(
      "validate-rules", "Check a rule file and print a per-rule summary");
  validate->add_option("rules", rules_path, "Rule DSL file")->required();

  BenchArgs ba;
  CLI::App *bench = app.add_subcommand(
      "bench", "Time the engine on right-branching synthetic trees");
  bench->add_option("--rules", ba.rules, "Rule DSL file (default: built-in)");
  bench->add_option("--sizes", ba.sizes, "Token counts")->delimiter(',');
  bench->add_option("--seed", ba.seed, "Corpus seed");
  bench->add_option("--per-size", ba.per_size, "Trees per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeats", ba.repeats, "Timed runs per tree")
      ->check(CLI::PositiveNumber);
  bench->add_option("--emit-corpus", ba.emit_corpus,
                    "Also write the synthetic trees here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFatal;
  }

  if (simplify->parsed()) return CmdSimplify(sa, in, out, err);
  if (validate->parsed()) return CmdValidateRules(rules_path, out, err);
  return CmdBench(ba, out, err);
}

}  // namespace treesimp
