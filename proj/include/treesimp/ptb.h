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

// Reading and writing Penn Treebank bracketed trees.

#ifndef TREESIMP_PTB_H_
#define TREESIMP_PTB_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treesimp/tree.h"

namespace treesimp {

class MalformedTree : public std::runtime_error {
 public:
  MalformedTree(std::size_t offset, const std::string &message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses one bracketed tree. Unlabeled unary wrappers are stripped, -NONE-
// empty categories are dropped together with any node they leave empty, and
// PTB bracket escapes in tokens are decoded.
PtbTree ParsePtb(std::string_view text);

// Single-line canonical form: one space between elements, tokens escaped.
std::string Serialize(const PtbTree &tree);

std::string EscapeToken(std::string_view token);
std::string UnescapeToken(std::string_view token);

// Renders tokens as a sentence: punctuation attachment, first letter
// uppercased, final period appended if missing.
std::string Detokenize(const std::vector<std::string> &tokens);

inline std::string RenderSentence(const PtbTree &tree) {
  return Detokenize(YieldTokens(tree));
}

enum class InputFormat { kAuto, kLine, kBlock };

// One input record. Either `tree` is set or `error` describes why the
// record's text did not parse.
struct CorpusItem {
  std::string text;
  std::optional<PtbTree> tree;
  std::string error;
};

// Splits a corpus into records: one tree per line, or blank-line separated
// multi-line blocks. kAuto picks line mode when the first non-blank line
// starts with '(' and is bracket-balanced.
std::vector<CorpusItem> ReadCorpus(std::string_view text,
                                   InputFormat format = InputFormat::kAuto);

InputFormat DetectInputFormat(std::string_view text);

}  // namespace treesimp

#endif  // TREESIMP_PTB_H_
