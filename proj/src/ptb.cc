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

#include "treesimp/ptb.h"

#include <array>
#include <cctype>
#include <utility>

namespace treesimp {

namespace {

struct Escape {
  std::string_view raw;
  std::string_view escaped;
};

constexpr std::array<Escape, 6> kEscapes = {{
    {"(", "-LRB-"},
    {")", "-RRB-"},
    {"[", "-LSB-"},
    {"]", "-RSB-"},
    {"{", "-LCB-"},
    {"}", "-RCB-"},
}};

void ReplaceAll(std::string &s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Raw syntax node produced by the scanner before canonicalization.
struct RawNode {
  std::string label;
  std::string token;  // set for leaves
  bool leaf = false;
  std::size_t offset = 0;
  std::vector<RawNode> children;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  RawNode ParseRoot() {
    SkipSpace();
    if (AtEnd()) throw MalformedTree(pos_, "empty input");
    if (text_[pos_] != '(') {
      throw MalformedTree(pos_, "expected '(' at start of tree");
    }
    RawNode root = ParseNode();
    SkipSpace();
    if (!AtEnd()) {
      throw MalformedTree(pos_, "unexpected input after end of tree");
    }
    return root;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(text_[pos_])) ++pos_;
  }

  std::string ReadAtom() {
    std::size_t start = pos_;
    while (!AtEnd() && !IsSpace(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  RawNode ParseNode() {
    RawNode node;
    node.offset = pos_;
    ++pos_;  // '('
    SkipSpace();
    if (AtEnd()) throw MalformedTree(pos_, "unbalanced brackets");
    if (text_[pos_] != '(' && text_[pos_] != ')') node.label = ReadAtom();
    bool has_atom = false;
    for (;;) {
      SkipSpace();
      if (AtEnd()) throw MalformedTree(pos_, "unbalanced brackets");
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        node.children.push_back(ParseNode());
      } else {
        RawNode leaf;
        leaf.offset = pos_;
        leaf.leaf = true;
        leaf.token = UnescapeToken(ReadAtom());
        has_atom = true;
        node.children.push_back(std::move(leaf));
      }
    }
    if (node.children.empty()) {
      throw MalformedTree(node.offset, node.label.empty()
                                           ? "empty node"
                                           : "label '" + node.label +
                                                 "' has no children");
    }
    if (has_atom && node.children.size() != 1) {
      throw MalformedTree(node.offset,
                          "a token must be the only child of its POS node");
    }
    if (has_atom && node.label.empty()) {
      throw MalformedTree(node.offset, "token without a POS label");
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Converts to PtbTree, dropping -NONE- material and unlabeled unary
// wrappers. Returns nullopt when the whole subtree was empty categories.
std::optional<PtbTree> Canonicalize(const RawNode &raw) {
  if (raw.leaf) return PtbTree::Leaf(raw.token);
  NodeLabel label = NodeLabel::Parse(raw.label);
  if (label.tag == "-NONE-") return std::nullopt;
  std::vector<PtbTree> children;
  children.reserve(raw.children.size());
  for (const RawNode &c : raw.children) {
    if (auto t = Canonicalize(c)) children.push_back(std::move(*t));
  }
  if (children.empty()) return std::nullopt;
  if (raw.label.empty() && children.size() == 1 && !children[0].is_leaf()) {
    return std::move(children[0]);
  }
  return PtbTree::Internal(std::move(label), std::move(children));
}

void SerializeInto(const PtbTree &tree, std::string &out) {
  if (tree.is_leaf()) {
    out += EscapeToken(tree.token());
    return;
  }
  out += '(';
  out += tree.label().ToString();
  for (const PtbTree &c : tree.children()) {
    out += ' ';
    SerializeInto(c, out);
  }
  out += ')';
}

bool NoSpaceBefore(const std::string &token) {
  return token == "," || token == "." || token == ";" || token == ":" ||
         token == ")" || token == "%" || token == "]" || token == "}" ||
         token == "!" || token == "?";
}

bool NoSpaceAfter(const std::string &token) {
  return token == "(" || token == "[" || token == "{";
}

bool IsSentenceFinal(const std::string &token) {
  return token == "." || token == "!" || token == "?";
}

bool IsBalancedLine(std::string_view line) {
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) return false;
  }
  return depth == 0;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

CorpusItem MakeItem(std::string text) {
  CorpusItem item;
  item.text = std::move(text);
  try {
    item.tree = ParsePtb(item.text);
  } catch (const MalformedTree &e) {
    item.error = e.what();
  }
  return item;
}

}  // namespace

MalformedTree::MalformedTree(std::size_t offset, const std::string &message)
    : std::runtime_error("malformed tree at byte " + std::to_string(offset) +
                         ": " + message),
      offset_(offset) {}

PtbTree ParsePtb(std::string_view text) {
  RawNode raw = Scanner(text).ParseRoot();
  std::optional<PtbTree> tree = Canonicalize(raw);
  if (!tree) throw MalformedTree(0, "tree contains only empty categories");
  return std::move(*tree);
}

std::string Serialize(const PtbTree &tree) {
  std::string out;
  out.reserve(tree.num_nodes() * 8);
  SerializeInto(tree, out);
  return out;
}

std::string EscapeToken(std::string_view token) {
  for (const Escape &e : kEscapes) {
    if (token == e.raw) return std::string(e.escaped);
  }
  std::string out(token);
  ReplaceAll(out, "(", "-LRB-");
  ReplaceAll(out, ")", "-RRB-");
  return out;
}

std::string UnescapeToken(std::string_view token) {
  for (const Escape &e : kEscapes) {
    if (token == e.escaped) return std::string(e.raw);
  }
  std::string out(token);
  ReplaceAll(out, "-LRB-", "(");
  ReplaceAll(out, "-RRB-", ")");
  return out;
}

std::string Detokenize(const std::vector<std::string> &tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !NoSpaceBefore(tokens[i]) && !NoSpaceAfter(tokens[i - 1])) {
      out += ' ';
    }
    out += tokens[i];
  }
  for (char &c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
  }
  if (!tokens.empty() && !IsSentenceFinal(tokens.back())) out += '.';
  return out;
}

InputFormat DetectInputFormat(std::string_view text) {
  for (std::string_view line : SplitLines(text)) {
    std::string_view t = Trim(line);
    if (t.empty()) continue;
    return t.front() == '(' && IsBalancedLine(t) ? InputFormat::kLine
                                                 : InputFormat::kBlock;
  }
  return InputFormat::kLine;
}

std::vector<CorpusItem> ReadCorpus(std::string_view text, InputFormat format) {
  if (format == InputFormat::kAuto) format = DetectInputFormat(text);
  std::vector<CorpusItem> items;
  std::string block;
  for (std::string_view line : SplitLines(text)) {
    std::string_view t = Trim(line);
    if (format == InputFormat::kLine) {
      if (!t.empty()) items.push_back(MakeItem(std::string(t)));
      continue;
    }
    if (t.empty()) {
      if (!block.empty()) items.push_back(MakeItem(std::move(block)));
      block.clear();
      continue;
    }
    if (!block.empty()) block += ' ';
    block += t;
  }
  if (!block.empty()) items.push_back(MakeItem(std::move(block)));
  return items;
}

}  // namespace treesimp
