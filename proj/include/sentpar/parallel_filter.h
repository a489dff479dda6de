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

#ifndef SENTPAR_PARALLEL_FILTER_H_
#define SENTPAR_PARALLEL_FILTER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentpar/clause_rules.h"
#include "sentpar/sentiment.h"

namespace sentpar {

// The five sentiment-parallelism rules, checked in this order.
enum class ParallelRule : std::uint8_t { kR1 = 0, kR2, kR3, kR4, kR5 };
inline constexpr std::size_t kNumParallelRules = 5;

std::string ToString(ParallelRule rule);

struct ParallelVerdict {
  bool parallel = false;
  std::optional<ParallelRule> rule;
};

// R1 both sides POS only; R2 both NEG only; R3 both carry POS and NEG;
// R4 one side both, the other POS only; R5 one side both, the other NEG only.
// Pairs with an untagged side never match.
ParallelVerdict IsParallel(TagSet source_tags, TagSet target_tags);

struct ParallelPair {
  std::size_t record_id = 0;
  TaggedSentence source;  // English
  TaggedSentence target;  // Bengali
  std::optional<ComplexityClass> complexity;
  bool kept = false;
  std::optional<ParallelRule> matched_rule;
};

struct DropEntry {
  std::size_t record_id = 0;
  TagSet source_tags;
  TagSet target_tags;
};

struct FilterStats {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t dropped = 0;
  std::array<std::size_t, kNumParallelRules> per_rule{};
  // Kept pairs per complexity class; pairs without a class are not counted.
  std::map<ComplexityClass, std::size_t> kept_per_class;

  // Tab-separated "key<TAB>value" report.
  std::string ToReport() const;
};

struct FilterResult {
  std::vector<ParallelPair> kept;
  std::vector<DropEntry> drop_log;
  FilterStats stats;
};

FilterResult FilterCorpus(std::vector<ParallelPair> pairs);

// Builds pairs from separately stored sides (record ids 1..n). Throws
// AlignmentError when the sides or the complexity list differ in length.
FilterResult FilterCorpus(std::span<const TaggedSentence> sources,
                          std::span<const TaggedSentence> targets,
                          std::span<const std::optional<ComplexityClass>> complexity = {});

// "record_id<TAB>e_tags<TAB>b_tags" lines.
std::string FormatDropLog(std::span<const DropEntry> drops);

}  // namespace sentpar

#endif  // SENTPAR_PARALLEL_FILTER_H_
