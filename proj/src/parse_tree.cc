// Copyright 2026 The Sentpar Authors.
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

#include "sentpar/parse_tree.h"

#include <array>

#include "sentpar/errors.h"
#include "sentpar/parallel.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace {

constexpr std::array<std::string_view, 7> kPunctuationLabels = {
    ",", ".", ":", "``", "''", "-LRB-", "-RRB-"};

// Recursive-descent reader over one bracketed expression.
class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  ParseTree ReadTree() {
    SkipSpace();
    ParseTree tree = ReadNode();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing text after tree");
    return tree;
  }

 private:
  ParseTree ReadNode() {
    Expect('(');
    ParseTree node;
    SkipSpace();
    node.label = ReadAtom();
    if (node.label.empty()) Fail("expected label after '('");
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() == '(') {
      while (!AtEnd() && Peek() == '(') {
        node.children.push_back(ReadNode());
        SkipSpace();
      }
    } else {
      std::string token = ReadAtom();
      if (token.empty()) Fail("expected token or subtree");
      node.token = std::move(token);
      SkipSpace();
    }
    Expect(')');
    return node;
  }

  std::string ReadAtom() {
    std::size_t start = pos_;
    while (!AtEnd() && !IsSpace(Peek()) && Peek() != '(' && Peek() != ')')
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void Expect(char c) {
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(Peek())) ++pos_;
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  [[noreturn]] void Fail(const std::string &what) const {
    throw MalformedParseError("malformed parse: " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void AppendString(const ParseTree &node, std::string *out) {
  out->push_back('(');
  out->append(node.label);
  if (node.token) {
    out->push_back(' ');
    out->append(*node.token);
  }
  for (const ParseTree &child : node.children) {
    out->push_back(' ');
    AppendString(child, out);
  }
  out->push_back(')');
}

void CollectLeaves(const ParseTree &node, std::vector<PosToken> *out) {
  if (node.token) {
    out->push_back({*node.token, node.label});
    return;
  }
  for (const ParseTree &child : node.children) CollectLeaves(child, out);
}

}  // namespace

std::size_t ParseTree::leaf_count() const {
  if (token) return 1;
  std::size_t n = 0;
  for (const ParseTree &child : children) n += child.leaf_count();
  return n;
}

std::string ParseTree::ToString() const {
  std::string out;
  AppendString(*this, &out);
  return out;
}

bool IsPunctuationLabel(std::string_view label) {
  for (std::string_view p : kPunctuationLabels)
    if (p == label) return true;
  return false;
}

ParseTree ParseBracketed(std::string_view text) {
  if (Trim(text).empty()) throw EmptyInputError("empty parse input");
  return BracketReader(text).ReadTree();
}

PhraseSequence PhraseSequenceOf(const ParseTree &tree) {
  const ParseTree *clause = &tree;
  while (clause->label == "ROOT" && clause->children.size() == 1)
    clause = &clause->children.front();
  if (clause->is_leaf())
    throw DegenerateTreeError("tree has no phrase structure: " +
                              tree.ToString());
  PhraseSequence labels;
  for (const ParseTree &child : clause->children)
    if (!IsPunctuationLabel(child.label)) labels.push_back(child.label);
  return labels;
}

std::vector<PosToken> PosSequence(const ParseTree &tree) {
  std::vector<PosToken> out;
  CollectLeaves(tree, &out);
  return out;
}

std::vector<std::string> Tokens(const ParseTree &tree) {
  std::vector<std::string> out;
  for (PosToken &t : PosSequence(tree)) out.push_back(std::move(t.token));
  return out;
}

ParseFile ParseLines(std::string_view text, std::string_view source_name,
                     unsigned jobs) {
  std::vector<std::string_view> lines = SplitLines(text);
  ParseFile trees(lines.size());
  ParallelFor(lines.size(), jobs, [&](std::size_t i) {
    if (Trim(lines[i]).empty()) return;
    try {
      trees[i] = ParseBracketed(lines[i]);
    } catch (const MalformedParseError &e) {
      throw LineError(std::string(source_name), i + 1, e.what());
    }
  });
  return trees;
}

ParseFile ReadParseFile(const std::string &path, unsigned jobs) {
  return ParseLines(ReadFile(path), path, jobs);
}

}  // namespace sentpar
