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

#ifndef SENTPAR_CLAUSE_RULES_H_
#define SENTPAR_CLAUSE_RULES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentpar/parse_tree.h"

namespace sentpar {

// One position of a phrase-structure rule: a phrase label that must occur
// exactly once, or (one_or_more) as a run of one or more copies.
struct PatternItem {
  std::string label;
  bool one_or_more = false;

  friend bool operator==(const PatternItem &, const PatternItem &) = default;
};

struct PhraseSeqRule {
  std::vector<PatternItem> pattern;
  std::size_t match_count = 0;
  double confidence = 0.0;  // fraction of the mining set, in [0, 1]

  // Surface form with '*' marking one-or-more items: "NP* VP PP".
  std::string SurfaceForm() const;
};

struct RuleSet {
  std::vector<PhraseSeqRule> rules;
  std::size_t total = 0;  // size of the mining set
};

// Collapses runs of identical labels, one rule per distinct collapsed shape.
// An item is one-or-more when any contributing sequence repeats it. Rules
// appear in order of first occurrence. Throws EmptyInputError on no input.
RuleSet MineRules(std::span<const PhraseSequence> simple_sequences);

// match_count / total. Throws DivisionByZeroError when total is 0 and
// std::invalid_argument when match_count > total.
double Confidence(std::size_t match_count, std::size_t total);

// Whole-sequence membership in the regular language the pattern denotes.
bool Matches(std::span<const PatternItem> pattern, const PhraseSequence &seq);
inline bool Matches(const PhraseSeqRule &rule, const PhraseSequence &seq) {
  return Matches(rule.pattern, seq);
}

// Rule file I/O: "NP* VP<TAB>count<TAB>percent" per line. The writer emits a
// leading "# total<TAB>N" line so the mining-set size survives a round trip;
// the reader accepts files with or without it.
std::string FormatRules(const RuleSet &rules);
RuleSet ParseRules(std::string_view text, std::string_view source_name);
std::vector<PatternItem> ParsePattern(std::string_view surface);

enum class ComplexityClass : std::uint8_t { kSimple, kComplex, kCompound, kUntagged };

std::string_view ToString(ComplexityClass c);
std::optional<ComplexityClass> ParseComplexityClass(std::string_view s);

// Subordinate clause detection on SBAR nodes. True when an SBAR does not start
// the sentence, or starts it and a comma token follows the SBAR.
bool IsComplex(const ParseTree &tree);

// True when some CC node is followed by an S sibling (punctuation siblings
// in between are skipped).
bool IsCompound(const ParseTree &tree);

bool ContainsLabel(const ParseTree &tree, std::string_view label);

// Precedence: Complex, Compound, Simple, Untagged.
ComplexityClass Classify(const ParseTree &tree, const RuleSet &rules);

enum class BinaryLabel : std::uint8_t { kOther = 0, kSimple = 1 };

inline BinaryLabel Binarize(ComplexityClass c) {
  return c == ComplexityClass::kSimple ? BinaryLabel::kSimple
                                       : BinaryLabel::kOther;
}

// Rows are gold {Other, Simple}, columns predicted {Other, Simple}.
using ConfusionMatrix = std::array<std::array<std::size_t, 2>, 2>;

struct ConfusionMetrics {
  ConfusionMatrix matrix{};
  // Simple is the positive class.
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
};

ConfusionMetrics EvaluateMatrix(const ConfusionMatrix &matrix);

// Throws AlignmentError on length mismatch and EmptyInputError on empty input.
ConfusionMetrics Evaluate(std::span<const ComplexityClass> predicted,
                          std::span<const BinaryLabel> gold);

}  // namespace sentpar

#endif  // SENTPAR_CLAUSE_RULES_H_
