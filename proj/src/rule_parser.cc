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
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "treesimp/rules.h"

namespace treesimp {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Drops a '#' comment. '#' only starts a comment at the beginning of a word.
std::string_view StripComment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || IsSpace(line[i - 1]))) {
      return line.substr(0, i);
    }
  }
  return line;
}

// Splits on whitespace outside parentheses and double quotes.
std::vector<std::string> SplitItems(std::string_view s) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (IsSpace(c) && depth == 0) {
        if (!cur.empty()) items.push_back(std::move(cur));
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  if (!cur.empty()) items.push_back(std::move(cur));
  return items;
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

class LineParser {
 public:
  LineParser(int line, std::string_view text) : line_(line), text_(text) {}

  [[noreturn]] void Fail(const std::string &message) const {
    throw DslSyntaxError(line_, message);
  }

  // Text strictly between the first `open` and the last `close`.
  std::string_view Enclosed(std::string_view s, char open, char close,
                            std::string_view what) const {
    std::size_t a = s.find(open);
    std::size_t b = s.rfind(close);
    if (a == std::string_view::npos || b == std::string_view::npos || b < a) {
      Fail(std::string(what) + " needs '" + open + " ... " + close + "'");
    }
    if (!Trim(s.substr(0, a)).empty()) {
      Fail("unexpected text before '" + std::string(1, open) + "' in " +
           std::string(what));
    }
    if (!Trim(s.substr(b + 1)).empty()) {
      Fail("unexpected text after '" + std::string(1, close) + "' in " +
           std::string(what));
    }
    return s.substr(a + 1, b - a - 1);
  }

  std::string ParseVarRef(std::string_view s) const {
    s = Trim(s);
    if (s.size() < 2 || s[0] != '$') {
      Fail("expected a variable like $x, got '" + std::string(s) + "'");
    }
    for (char c : s.substr(1)) {
      if (!IsIdentChar(c)) Fail("bad variable name '" + std::string(s) + "'");
    }
    return std::string(s.substr(1));
  }

  std::vector<std::string> ParseTagSet(std::string_view s) const {
    s = Trim(s);
    if (!s.empty() && s.front() == '{') {
      if (s.back() != '}') Fail("unterminated tag set '" + std::string(s) + "'");
      std::vector<std::string> tags = SplitWords(s.substr(1, s.size() - 2));
      if (tags.empty()) Fail("empty tag set");
      return tags;
    }
    if (s.empty() || s.find_first_of(" \t") != std::string_view::npos) {
      Fail("expected a tag or {TAG ...}, got '" + std::string(s) + "'");
    }
    return {std::string(s)};
  }

  // Splits "a, {b c}, d" at commas outside braces and quotes.
  std::vector<std::string> SplitArgs(std::string_view s) const {
    std::vector<std::string> args;
    std::string cur;
    int depth = 0;
    bool quoted = false;
    for (char c : s) {
      if (c == '"') quoted = !quoted;
      if (!quoted && c == '{') ++depth;
      if (!quoted && c == '}') --depth;
      if (!quoted && depth == 0 && c == ',') {
        args.emplace_back(Trim(cur));
        cur.clear();
        continue;
      }
      cur += c;
    }
    if (!Trim(cur).empty() || !args.empty()) args.emplace_back(Trim(cur));
    return args;
  }

  // "name(args)" -> {name, args}.
  std::pair<std::string, std::vector<std::string>> ParseCall(
      std::string_view s) const {
    std::size_t open = s.find('(');
    std::size_t close = s.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close < open) {
      Fail("expected name(args), got '" + std::string(s) + "'");
    }
    return {std::string(Trim(s.substr(0, open))),
            SplitArgs(s.substr(open + 1, close - open - 1))};
  }

  TemplateItem ParseItem(std::string_view s, int *gap_counter) const {
    TemplateItem item;
    if (s == "...") {
      item.kind = TemplateItem::Kind::kGap;
      item.gap = (*gap_counter)++;
      return item;
    }
    if (s == "$self") {
      item.kind = TemplateItem::Kind::kSelf;
      return item;
    }
    if (!s.empty() && s[0] == '$') {
      item.kind = TemplateItem::Kind::kRef;
      item.var = ParseVarRef(s);
      return item;
    }
    auto [name, args] = ParseCall(s);
    if (name == "lit") {
      if (args.size() != 2) Fail("lit() takes a tag and a quoted word");
      std::string_view word = args[1];
      if (word.size() < 3 || word.front() != '"' || word.back() != '"') {
        Fail("lit() word must be quoted, got '" + std::string(word) + "'");
      }
      item.kind = TemplateItem::Kind::kScaffold;
      item.tag = args[0];
      item.token = std::string(word.substr(1, word.size() - 2));
      if (item.tag.empty()) Fail("lit() needs a tag");
      if (item.token.find_first_of(" \t()") != std::string::npos) {
        Fail("lit() word may not contain spaces or parentheses");
      }
      return item;
    }
    if (name == "strip_brackets") {
      if (args.size() != 1) Fail("strip_brackets() takes one variable");
      item.kind = TemplateItem::Kind::kStripBrackets;
      item.var = ParseVarRef(args[0]);
      return item;
    }
    if (name == "subst_whnp") {
      if (args.size() != 2) Fail("subst_whnp() takes two variables");
      item.kind = TemplateItem::Kind::kSubstituteWhnp;
      item.var = ParseVarRef(args[0]);
      item.with_var = ParseVarRef(args[1]);
      return item;
    }
    Fail("unknown template item '" + std::string(s) + "'");
  }

  std::vector<TemplateItem> ParseItems(std::string_view s) const {
    std::vector<TemplateItem> items;
    int gaps = 0;
    for (const std::string &word : SplitItems(s)) {
      items.push_back(ParseItem(word, &gaps));
    }
    return items;
  }

  void ParseHeader(std::string_view rest, RuleSpec *rule) const {
    rest = Trim(rest);
    std::size_t end = 0;
    while (end < rest.size() && !IsSpace(rest[end])) ++end;
    rule->name = std::string(rest.substr(0, end));
    if (rule->name.empty()) Fail("rule needs a name");
    rest = Trim(rest.substr(end));
    bool has_mode = false;
    while (!rest.empty()) {
      std::size_t eq = rest.find('=');
      if (eq == std::string_view::npos) {
        Fail("expected key=value in rule header, got '" + std::string(rest) +
             "'");
      }
      std::string key(Trim(rest.substr(0, eq)));
      rest = Trim(rest.substr(eq + 1));
      if (key == "tags") {
        if (rest.empty() || rest[0] != '(') Fail("tags must be written tags=(...)");
        std::size_t close = rest.find(')');
        if (close == std::string_view::npos) Fail("unterminated tags=(...)");
        for (std::string &t : SplitWords(rest.substr(1, close - 1))) {
          rule->tags.insert(std::move(t));
        }
        rest = Trim(rest.substr(close + 1));
      } else if (key == "mode") {
        std::size_t e = 0;
        while (e < rest.size() && !IsSpace(rest[e])) ++e;
        std::string_view mode = rest.substr(0, e);
        if (mode == "necessary") {
          rule->mode = RuleMode::kNecessary;
        } else if (mode == "optional") {
          rule->mode = RuleMode::kOptional;
        } else {
          Fail("mode must be necessary or optional, got '" +
               std::string(mode) + "'");
        }
        has_mode = true;
        rest = Trim(rest.substr(e));
      } else {
        Fail("unknown rule attribute '" + key + "'");
      }
    }
    if (!has_mode) Fail("rule '" + rule->name + "' has no mode=");
  }

  void ParseMatch(std::string_view rest, RuleSpec *rule) const {
    if (!rule->parent_tags.empty()) Fail("rule has more than one match line");
    std::size_t bracket = rest.find('[');
    if (bracket == std::string_view::npos) Fail("match needs '[ ... ]'");
    std::string_view parents = Trim(rest.substr(0, bracket));
    if (parents.empty()) Fail("match needs a parent tag");
    std::size_t start = 0;
    while (start <= parents.size()) {
      std::size_t bar = parents.find('|', start);
      if (bar == std::string_view::npos) bar = parents.size();
      std::string_view tag = Trim(parents.substr(start, bar - start));
      if (tag.empty()) Fail("empty alternative in parent tags");
      rule->parent_tags.emplace_back(tag);
      start = bar + 1;
    }
    for (const std::string &word :
         SplitWords(Enclosed(rest.substr(bracket), '[', ']', "match"))) {
      PatternElement e;
      if (word == "...") {
        e.kind = PatternElement::Kind::kGap;
      } else if (word[0] == '$') {
        std::size_t colon = word.find(':');
        if (colon == std::string::npos || colon + 1 == word.size()) {
          Fail("pattern variable needs a tag, as in $x:NP (got '" + word +
               "')");
        }
        e.kind = PatternElement::Kind::kVar;
        e.var = ParseVarRef(std::string_view(word).substr(0, colon));
        e.tag = word.substr(colon + 1);
      } else {
        e.kind = PatternElement::Kind::kLit;
        e.tag = word;
      }
      rule->pattern.push_back(std::move(e));
    }
  }

  Condition ParseCondition(std::string_view rest) const {
    rest = Trim(rest);
    Condition cond;
    std::size_t close = rest.find(')');
    if (close == std::string_view::npos) Fail("expected predicate(args)");
    auto [name, args] = ParseCall(rest.substr(0, close + 1));
    std::string_view tail = Trim(rest.substr(close + 1));

    static const std::map<std::string, Condition::Kind> kTwoArg = {
        {"contains", Condition::Kind::kContains},
        {"lacks", Condition::Kind::kLacks},
        {"contains_all", Condition::Kind::kContainsAll},
        {"not_all", Condition::Kind::kNotAll},
    };
    if (name == "first_pos") {
      if (args.size() != 1) Fail("first_pos() takes one variable");
      if (tail.substr(0, 2) != "in") Fail("first_pos(...) must be followed by 'in {TAGS}'");
      cond.kind = Condition::Kind::kFirstLeafPos;
      cond.var = args[0] == "self" ? "" : ParseVarRef(args[0]);
      cond.tags = ParseTagSet(tail.substr(2));
      return cond;
    }
    if (!tail.empty()) Fail("unexpected text after predicate: '" + std::string(tail) + "'");
    if (auto it = kTwoArg.find(name); it != kTwoArg.end()) {
      if (args.size() != 2) Fail(name + "() takes a variable and tags");
      cond.kind = it->second;
      cond.var = args[0] == "self" ? "" : ParseVarRef(args[0]);
      cond.tags = ParseTagSet(args[1]);
      return cond;
    }
    if (name.rfind("self_", 0) == 0) {
      auto it = kTwoArg.find(name.substr(5));
      if (it == kTwoArg.end()) Fail("unknown predicate '" + name + "'");
      if (args.size() != 1) Fail(name + "() takes tags only");
      cond.kind = it->second;
      cond.tags = ParseTagSet(args[0]);
      return cond;
    }
    Fail("unknown predicate '" + name + "'");
  }

  void ParseLine(RuleSpec *rule) const {
    std::size_t end = 0;
    while (end < text_.size() && !IsSpace(text_[end])) ++end;
    std::string_view keyword = text_.substr(0, end);
    std::string_view rest = Trim(text_.substr(end));
    if (keyword == "match") {
      ParseMatch(rest, rule);
    } else if (keyword == "where") {
      rule->conditions.push_back(ParseCondition(rest));
    } else if (keyword == "keep") {
      rule->keep.push_back(ParseItems(Enclosed(rest, '[', ']', "keep")));
    } else if (keyword == "spawn") {
      std::string_view body = Trim(Enclosed(rest, '{', '}', "spawn"));
      SpawnTemplate spawn;
      std::size_t sp = 0;
      while (sp < body.size() && !IsSpace(body[sp])) ++sp;
      std::string_view first = body.substr(0, sp);
      if (first.size() > 1 && first.back() == ':') {
        spawn.root_tag = std::string(first.substr(0, first.size() - 1));
        body = body.substr(sp);
      }
      spawn.items = ParseItems(body);
      rule->spawn.push_back(std::move(spawn));
    } else if (keyword == "del") {
      for (const std::string &word :
           SplitWords(Enclosed(rest, '{', '}', "del"))) {
        rule->del.push_back(ParseVarRef(word));
      }
    } else {
      Fail("unknown keyword '" + std::string(keyword) + "'");
    }
  }

 private:
  int line_;
  std::string_view text_;
};

// Every variable a template item reads.
void CollectVars(const TemplateItem &item, std::vector<std::string> *out) {
  if (!item.var.empty()) out->push_back(item.var);
  if (!item.with_var.empty()) out->push_back(item.with_var);
}

class RuleChecker {
 public:
  RuleChecker(const RuleSpec &rule, std::vector<RuleDiagnostic> *out)
      : rule_(rule), out_(out) {}

  void Report(RuleDiagnostic::Check check, const std::string &message) {
    out_->push_back({check, rule_.name, rule_.line, message});
  }

  void Run() {
    if (rule_.parent_tags.empty()) {
      Report(RuleDiagnostic::Check::kStructure, "rule has no match line");
      return;
    }
    CheckPattern();
    CheckBindings();
    CheckPartition();
    if (rule_.keep.empty() && rule_.spawn.empty()) {
      Report(RuleDiagnostic::Check::kStructure,
             "rule has neither keep nor spawn; it would produce nothing");
    }
    for (std::size_t k = 0; k < rule_.keep.size(); ++k) {
      if (rule_.keep[k].empty()) {
        Report(RuleDiagnostic::Check::kStructure,
               "keep clause " + std::to_string(k + 1) +
                   " is empty and would leave an empty node");
      }
    }
    if (!ShrinksStatically(rule_) && !rule_.keep.empty()) {
      Report(RuleDiagnostic::Check::kShrinking,
             "a keep clause retains every matched child, so the rewritten "
             "tree would not be shorter");
    }
  }

 private:
  void CheckPattern() {
    int gaps = 0;
    for (std::size_t i = 0; i < rule_.pattern.size(); ++i) {
      const PatternElement &e = rule_.pattern[i];
      if (e.kind == PatternElement::Kind::kGap) {
        ++gaps;
        if (i != 0 && i + 1 != rule_.pattern.size()) {
          Report(RuleDiagnostic::Check::kStructure,
                 "'...' may only appear at the start or end of a pattern");
        }
      }
      if (e.kind == PatternElement::Kind::kVar) {
        if (e.var == "self") {
          Report(RuleDiagnostic::Check::kBinding,
                 "$self is reserved and cannot be bound in a pattern");
        }
        if (!bound_.insert(e.var).second) {
          Report(RuleDiagnostic::Check::kBinding,
                 "$" + e.var + " is bound twice in the pattern");
        }
      }
    }
    if (gaps > 2 || (gaps == 2 && rule_.pattern.size() < 3)) {
      Report(RuleDiagnostic::Check::kStructure,
             "pattern has more gaps than a leading and a trailing one");
    }
    num_gaps_ = rule_.NumGaps();
  }

  void CheckRef(const std::string &var, const std::string &where) {
    if (!bound_.count(var)) {
      Report(RuleDiagnostic::Check::kBinding,
             "$" + var + " used in " + where + " is not bound by the pattern");
    }
  }

  void CheckItems(const std::vector<TemplateItem> &items, bool is_keep,
                  const std::string &where) {
    std::set<std::string> seen;
    for (const TemplateItem &item : items) {
      switch (item.kind) {
        case TemplateItem::Kind::kGap:
          if (item.gap >= num_gaps_) {
            Report(RuleDiagnostic::Check::kBinding,
                   where + " refers to more '...' gaps than the pattern has");
          }
          break;
        case TemplateItem::Kind::kSelf:
          if (is_keep) {
            Report(RuleDiagnostic::Check::kStructure,
                   "$self is only allowed in spawn templates");
          }
          break;
        case TemplateItem::Kind::kScaffold:
          if (is_keep) {
            Report(RuleDiagnostic::Check::kStructure,
                   "lit() is only allowed in spawn templates");
          }
          break;
        case TemplateItem::Kind::kSubstituteWhnp:
          if (is_keep) {
            Report(RuleDiagnostic::Check::kStructure,
                   "subst_whnp() is only allowed in spawn templates");
          }
          break;
        default:
          break;
      }
      std::vector<std::string> vars;
      CollectVars(item, &vars);
      for (const std::string &v : vars) {
        CheckRef(v, where);
        if (is_keep && !seen.insert(v).second) {
          Report(RuleDiagnostic::Check::kStructure,
                 "$" + v + " appears twice in " + where);
        }
      }
    }
  }

  void CheckBindings() {
    for (const Condition &c : rule_.conditions) {
      if (!c.var.empty()) CheckRef(c.var, "a where condition");
    }
    for (std::size_t k = 0; k < rule_.keep.size(); ++k) {
      CheckItems(rule_.keep[k], true, "keep clause " + std::to_string(k + 1));
    }
    for (std::size_t s = 0; s < rule_.spawn.size(); ++s) {
      if (rule_.spawn[s].items.empty()) {
        Report(RuleDiagnostic::Check::kStructure,
               "spawn template " + std::to_string(s + 1) + " is empty");
      }
      CheckItems(rule_.spawn[s].items, false,
                 "spawn template " + std::to_string(s + 1));
    }
    for (const std::string &v : rule_.del) CheckRef(v, "del");
  }

  void CheckPartition() {
    std::set<std::string> kept, spawned, deleted(rule_.del.begin(),
                                                 rule_.del.end());
    for (const auto &keep : rule_.keep) {
      for (const TemplateItem &item : keep) {
        std::vector<std::string> vars;
        CollectVars(item, &vars);
        kept.insert(vars.begin(), vars.end());
      }
    }
    for (const SpawnTemplate &s : rule_.spawn) {
      for (const TemplateItem &item : s.items) {
        std::vector<std::string> vars;
        CollectVars(item, &vars);
        spawned.insert(vars.begin(), vars.end());
      }
    }
    for (const PatternElement &e : rule_.pattern) {
      if (e.kind != PatternElement::Kind::kVar) continue;
      bool k = kept.count(e.var), s = spawned.count(e.var),
           d = deleted.count(e.var);
      if (!k && !s && !d) {
        Report(RuleDiagnostic::Check::kPartition,
               "matched child $" + e.var +
                   " is not assigned to keep, spawn or del");
      }
      if (d && (k || s)) {
        Report(RuleDiagnostic::Check::kPartition,
               "$" + e.var + " is deleted but also kept or spawned");
      }
    }
  }

  const RuleSpec &rule_;
  std::vector<RuleDiagnostic> *out_;
  std::set<std::string> bound_;
  int num_gaps_ = 0;
};

}  // namespace

DslSyntaxError::DslSyntaxError(int line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string_view RuleModeName(RuleMode mode) {
  return mode == RuleMode::kNecessary ? "necessary" : "optional";
}

std::string_view CheckName(RuleDiagnostic::Check check) {
  switch (check) {
    case RuleDiagnostic::Check::kStructure:
      return "structure";
    case RuleDiagnostic::Check::kBinding:
      return "binding";
    case RuleDiagnostic::Check::kPartition:
      return "partition";
    case RuleDiagnostic::Check::kShrinking:
      return "shrinking";
    case RuleDiagnostic::Check::kDuplicate:
      return "duplicate";
  }
  return "unknown";
}

std::string RuleDiagnostic::ToString() const {
  std::string out;
  if (!rule.empty()) out += "rule '" + rule + "' ";
  if (line > 0) out += "(line " + std::to_string(line) + ") ";
  out += std::string(CheckName(check)) + ": " + message;
  return out;
}

bool RuleSpec::MatchesParent(const std::string &tag) const {
  for (const std::string &p : parent_tags) {
    if (p == tag) return true;
  }
  return false;
}

int RuleSpec::NumGaps() const {
  return static_cast<int>(std::count_if(
      pattern.begin(), pattern.end(), [](const PatternElement &e) {
        return e.kind == PatternElement::Kind::kGap;
      }));
}

const RuleSpec *RuleSet::Find(std::string_view name) const {
  for (const RuleSpec &r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

RuleSet ParseRuleSet(std::string_view text, std::string source_path) {
  RuleSet set;
  set.source_path = std::move(source_path);
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = Trim(StripComment(text.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;
    LineParser parser(line_no, line);
    if (line.substr(0, 5) == "rule " || line == "rule") {
      RuleSpec rule;
      rule.line = line_no;
      parser.ParseHeader(line.substr(4), &rule);
      set.rules.push_back(std::move(rule));
      continue;
    }
    if (set.rules.empty()) parser.Fail("expected 'rule NAME ...' first");
    parser.ParseLine(&set.rules.back());
  }
  return set;
}

bool ShrinksStatically(const RuleSpec &rule) {
  if (rule.keep.empty()) return false;
  for (const auto &keep : rule.keep) {
    std::set<std::string> used;
    for (const TemplateItem &item : keep) {
      std::vector<std::string> vars;
      CollectVars(item, &vars);
      used.insert(vars.begin(), vars.end());
    }
    bool drops_something = false;
    for (const PatternElement &e : rule.pattern) {
      if (e.kind == PatternElement::Kind::kLit ||
          (e.kind == PatternElement::Kind::kVar && !used.count(e.var))) {
        drops_something = true;
      }
    }
    if (!drops_something) return false;
  }
  return true;
}

std::vector<RuleDiagnostic> ValidateRuleSet(const RuleSet &rules) {
  std::vector<RuleDiagnostic> out;
  if (rules.rules.empty()) {
    out.push_back({RuleDiagnostic::Check::kStructure, "", 0,
                   "rule set contains no rules"});
    return out;
  }
  std::set<std::string> names;
  for (const RuleSpec &rule : rules.rules) {
    if (!names.insert(rule.name).second) {
      out.push_back({RuleDiagnostic::Check::kDuplicate, rule.name, rule.line,
                     "duplicate rule name"});
    }
    RuleChecker(rule, &out).Run();
  }
  return out;
}

RuleSet LoadRuleSet(std::string_view text, std::string source_path) {
  RuleSet set = ParseRuleSet(text, std::move(source_path));
  std::vector<RuleDiagnostic> problems = ValidateRuleSet(set);
  if (!problems.empty()) {
    std::string message = problems[0].ToString();
    for (std::size_t i = 1; i < problems.size(); ++i) {
      message += "; " + problems[i].ToString();
    }
    throw DslSemanticError(message);
  }
  return set;
}

RuleSet LoadRuleSetFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read rules file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return LoadRuleSet(text.str(), path);
}

}  // namespace treesimp
