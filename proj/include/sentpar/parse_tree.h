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

#ifndef SENTPAR_PARSE_TREE_H_
#define SENTPAR_PARSE_TREE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sentpar {

// A node of a bracketed (Penn Treebank style) shallow parse. Leaves carry the
// surface token and their label is the part-of-speech tag; inner nodes carry
// phrase labels (NP, VP, SBAR, ...). A node has a token iff it has no
// children.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> token;

  bool is_leaf() const { return token.has_value(); }

  // Number of token-bearing leaves below (and including) this node.
  std::size_t leaf_count() const;

  // Serializes back to bracketed form: "(S (NP (PRP it)) (VP (VBD ran)))".
  std::string ToString() const;

  friend bool operator==(const ParseTree &, const ParseTree &) = default;
};

struct PosToken {
  std::string token;
  std::string pos;

  friend bool operator==(const PosToken &, const PosToken &) = default;
};

using PhraseSequence = std::vector<std::string>;

// Parses one bracketed tree. Throws EmptyInputError for blank input and
// MalformedParseError (with the byte offset of the problem) otherwise.
ParseTree ParseBracketed(std::string_view text);

// Labels of the clause node's immediate children with punctuation removed.
// A ROOT wrapper with a single child is looked through. Throws
// DegenerateTreeError for a leaf-only tree.
PhraseSequence PhraseSequenceOf(const ParseTree &tree);

// Leaves in sentence order paired with their POS labels.
std::vector<PosToken> PosSequence(const ParseTree &tree);

// Surface tokens in sentence order.
std::vector<std::string> Tokens(const ParseTree &tree);

bool IsPunctuationLabel(std::string_view label);

// One entry per line of a parse file. Blank lines yield std::nullopt so that
// index i always corresponds to corpus record i + 1.
using ParseFile = std::vector<std::optional<ParseTree>>;

// Parses every line of `text`. Lines are parsed on up to `jobs` threads;
// results keep input order. Malformed lines raise LineError naming the line.
ParseFile ParseLines(std::string_view text, std::string_view source_name,
                     unsigned jobs = 1);
ParseFile ReadParseFile(const std::string &path, unsigned jobs = 1);

}  // namespace sentpar

#endif  // SENTPAR_PARSE_TREE_H_
