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

#include "treesimp/synthetic.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string_view>

namespace treesimp {

namespace {

using Words = std::vector<std::string_view>;

const std::map<std::string_view, Words> &Lexicon() {
  static const std::map<std::string_view, Words> lexicon = {
      {"DT", {"the", "a", "these", "this"}},
      {"JJ", {"human", "novel", "murine", "specific", "active", "distinct"}},
      {"NN", {"receptor", "kinase", "protein", "ligand", "cell", "domain",
              "subunit", "factor", "expression", "binding"}},
      {"NNS", {"cells", "proteins", "receptors", "factors", "domains"}},
      {"NNP", {"MyoD", "IFNalpha", "TRADD", "Grb2", "p21"}},
      {"IN", {"of", "in", "with", "for", "on", "by"}},
      {"VBZ", {"binds", "activates", "inhibits", "requires"}},
      {"VBD", {"increased", "bound", "activated", "induced"}},
      {"VBP", {"bind", "regulate", "underlie", "interact"}},
      {"VB", {"bind", "prevent", "combat", "regulate"}},
      {"VBN", {"found", "expressed", "activated", "induced"}},
      {"VBG", {"containing", "demonstrating", "encoding", "binding"}},
      {"MD", {"can", "must", "may"}},
      {"CC", {"and", "or"}},
      {"WDT", {"that", "which"}},
      {"TO", {"to"}},
      {",", {","}},
      {":", {":"}},
      {".", {"."}},
      {"-LRB-", {"("}},
      {"-RRB-", {")"}},
  };
  return lexicon;
}

PtbTree Node(std::string_view tag, std::vector<PtbTree> children) {
  return PtbTree::Internal(tag, std::move(children));
}

}  // namespace

int TreeFuzzer::Pick(int n) {
  return static_cast<int>(rng_() % static_cast<std::uint64_t>(n));
}

PtbTree TreeFuzzer::Word(std::string_view tag) {
  const Words &words = Lexicon().at(tag);
  return PtbTree::Preterminal(tag, std::string(words[Pick(words.size())]));
}

PtbTree TreeFuzzer::Next(int max_tokens) {
  if (max_tokens < 3) throw std::invalid_argument("max_tokens must be >= 3");
  int depth = max_tokens <= 8 ? 1 : max_tokens <= 20 ? 2 : max_tokens <= 40 ? 3 : 4;
  for (;;) {
    PtbTree t = Sentence(depth);
    if (t.num_leaves() <= static_cast<std::size_t>(max_tokens)) return t;
    if (depth > 0 && Chance(10)) --depth;
  }
}

PtbTree TreeFuzzer::Sentence(int depth) {
  int r = Pick(10);
  if (r == 6 && depth > 0) {
    PtbTree purpose = Node(
        "S", {Node("VP", {Word("TO"), Node("VP", {Word("VB"), Np(depth - 1)})})});
    return Node("S", {purpose, Word(","), Np(depth - 1), Vp(depth - 1),
                      Word(".")});
  }
  if (r == 7 && depth > 0) {
    return Node("S", {Clause(depth - 1), Word(","), Word("CC"),
                      Clause(depth - 1), Word(".")});
  }
  if (r == 8) return Node("S", {Np(depth - 1), Vp(depth - 1)});
  return Node("S", {Np(depth - 1), Vp(depth - 1), Word(".")});
}

PtbTree TreeFuzzer::Clause(int depth) {
  return Node("S", {Np(depth - 1), Vp(depth - 1)});
}

PtbTree TreeFuzzer::BaseNp() {
  std::vector<PtbTree> kids;
  if (Chance(50)) kids.push_back(Word("DT"));
  if (Chance(30)) kids.push_back(Word("JJ"));
  if (Chance(25)) kids.push_back(Word("NN"));
  static constexpr std::array<std::string_view, 3> kHeads = {"NN", "NNS", "NNP"};
  kids.push_back(Word(kHeads[Pick(3)]));
  return Node("NP", std::move(kids));
}

PtbTree TreeFuzzer::Np(int depth) {
  if (depth <= 0 || Chance(45)) return BaseNp();
  switch (Pick(8)) {
    case 0:
    case 1:
      return Node("NP", {Np(depth - 1), Pp(depth - 1)});
    case 2:
      return Node("NP", {Np(depth - 1), Postmodifier(depth - 1)});
    case 3:
      return Node("NP", {Np(depth - 1), Adjp(depth - 1)});
    case 4: {
      std::vector<PtbTree> kids = {
          Np(depth - 1),
          Node("PRN", {Word("-LRB-"), BaseNp(), Word("-RRB-")})};
      if (Chance(40)) kids.push_back(Word("NN"));
      return Node("NP", std::move(kids));
    }
    case 5:
      return Node("NP", {Np(depth - 1), RelativeClause(depth - 1)});
    case 6:
      return Node("NP", {BaseNp(), Word(":"), Clause(depth - 1)});
    default:
      return Node("NP", {BaseNp(), Word("CC"), Np(depth - 1)});
  }
}

PtbTree TreeFuzzer::Postmodifier(int depth) {
  if (Chance(60)) return Node("VP", {Word("VBN"), Pp(depth)});
  return Node("VP", {Word("VBG"), Np(depth)});
}

PtbTree TreeFuzzer::RelativeClause(int depth) {
  return Node("SBAR",
              {Node("WHNP", {Word("WDT")}),
               Node("S", {Node("VP", {Word("VBP"), Np(depth - 1)})})});
}

PtbTree TreeFuzzer::Vp(int depth) {
  if (depth <= 0) {
    return Chance(50) ? Node("VP", {Word("VBZ"), BaseNp()})
                      : Node("VP", {Word("VBD")});
  }
  int d = depth - 1;
  switch (Pick(9)) {
    case 0:
      return Node("VP", {Word("VBZ"), Np(d)});
    case 1:
      return Node("VP", {Word("VBZ"), Np(d), Pp(d)});
    case 2: {
      PtbTree inner = Node("VP", {Word("VB"), Np(d)});
      PtbTree tail = Node("S", {Node("VP", {Word("VBG"), Np(d)})});
      return Node("VP", {Word("MD"), inner, Word(","), tail});
    }
    case 3:
      return Node("VP", {Word("VBD"), Np(d), Word(","), Pp(d)});
    case 4: {
      PtbTree sbar = Node(
          "SBAR", {Node("IN", {PtbTree::Leaf("as")}),
                   Node("S", {Node("VP", {Word("VBN"), Pp(d)})})});
      return Node("VP", {Word("VBD"), Word(","), sbar});
    }
    case 5:
      return Node("VP", {Vp(d), Word(","), Word("CC"), Vp(d)});
    case 6:
      return Node("VP", {Node("VP", {Word("VB")}), Word(","), Word("CC"),
                         Node("VP", {Word("VB")}), Word(","), Np(d)});
    case 7:
      return Node("VP", {Word("VBZ"), Node("SBAR", {Word("IN"), Clause(d)})});
    default:
      return Node("VP", {Word("VBD"), Adjp(d)});
  }
}

PtbTree TreeFuzzer::Pp(int depth) {
  if (depth > 0 && Chance(12)) {
    return Node("PP", {Pp(depth - 1), Word(","), Word("CC"), Pp(depth - 1)});
  }
  return Node("PP", {Word("IN"), Np(depth - 1)});
}

PtbTree TreeFuzzer::Adjp(int depth) {
  if (depth > 0 && Chance(15)) {
    return Node("ADJP",
                {Adjp(depth - 1), Word(","), Word("CC"), Adjp(depth - 1)});
  }
  if (depth > 0 && Chance(50)) return Node("ADJP", {Word("JJ"), Pp(depth - 1)});
  return Node("ADJP", {Word("JJ")});
}

PtbTree RightBranchingTree(int tokens, std::uint64_t seed) {
  if (tokens < 7) throw std::invalid_argument("right-branching tree needs >= 7 tokens");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](const Words &w) {
    return std::string(w[rng() % w.size()]);
  };
  const auto &lex = Lexicon();

  // Object chain: base NP sizes 1..3, each level after the first costs one
  // extra token for its preposition.
  int budget = tokens - 4;  // subject (2), verb, final period
  std::vector<int> sizes;
  while (budget > 0) {
    int cost_extra = sizes.empty() ? 0 : 1;
    int room = budget - cost_extra;
    if (room <= 0) {
      ++sizes.back();  // absorb a leftover token
      break;
    }
    int size = 1 + static_cast<int>(rng() % 3);
    if (size > room) size = room;
    if (room - size == 1) ++size;  // a later level needs at least two tokens
    sizes.push_back(size);
    budget -= size + cost_extra;
  }

  auto base = [&](int size) {
    std::vector<PtbTree> kids;
    if (size >= 2) kids.push_back(PtbTree::Preterminal("DT", pick(lex.at("DT"))));
    for (int i = 2; i < size; ++i) {
      kids.push_back(PtbTree::Preterminal("JJ", pick(lex.at("JJ"))));
    }
    kids.push_back(PtbTree::Preterminal("NN", pick(lex.at("NN"))));
    return Node("NP", std::move(kids));
  };

  PtbTree chain = base(sizes.back());
  for (std::size_t i = sizes.size() - 1; i-- > 0;) {
    PtbTree pp = Node("PP", {PtbTree::Preterminal("IN", pick(lex.at("IN"))),
                             std::move(chain)});
    chain = Node("NP", {base(sizes[i]), std::move(pp)});
  }
  PtbTree subject = base(2);
  PtbTree vp = Node("VP", {PtbTree::Preterminal("VBZ", pick(lex.at("VBZ"))),
                           std::move(chain)});
  return Node("S", {std::move(subject), std::move(vp),
                    PtbTree::Preterminal(".", ".")});
}

PowerFit FitPowerLaw(const std::vector<double> &x, const std::vector<double> &y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("power fit needs two or more paired points");
  }
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]);
    double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("power fit needs distinct x");
  PowerFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.log_scale = (sy - fit.exponent * sx) / n;
  return fit;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

std::vector<std::vector<PtbTree>> BenchCorpus(const BenchOptions &options) {
  std::vector<std::vector<PtbTree>> corpus;
  std::mt19937_64 seeds(options.seed);
  for (int n : options.sizes) {
    std::vector<PtbTree> trees;
    for (int i = 0; i < options.per_size; ++i) {
      trees.push_back(RightBranchingTree(n, seeds()));
    }
    corpus.push_back(std::move(trees));
  }
  return corpus;
}

BenchReport RunBench(const RuleSet &rules, const BenchOptions &options,
                     const EngineOptions &engine) {
  if (options.per_size < 1 || options.repeats < 1 || options.sizes.size() < 2) {
    throw std::invalid_argument("bench needs two sizes and positive counts");
  }
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  BenchReport report;
  std::vector<std::vector<PtbTree>> corpus = BenchCorpus(options);
  std::vector<double> xs, ys;
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    std::vector<double> times;
    double outputs = 0;
    for (const PtbTree &tree : corpus[s]) {
      std::size_t produced = 0;
      auto t0 = Clock::now();
      for (int r = 0; r < options.repeats; ++r) {
        produced = Simplify(tree, rules, engine).outputs.size();
      }
      std::chrono::duration<double> dt = Clock::now() - t0;
      times.push_back(dt.count() / options.repeats);
      outputs += static_cast<double>(produced);
    }
    BenchRow row{options.sizes[s], Median(times), outputs / corpus[s].size()};
    xs.push_back(row.tokens);
    ys.push_back(row.median_seconds);
    report.rows.push_back(row);
  }
  report.fit = FitPowerLaw(xs, ys);
  report.total_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace treesimp
