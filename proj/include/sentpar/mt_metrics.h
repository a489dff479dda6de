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

#ifndef SENTPAR_MT_METRICS_H_
#define SENTPAR_MT_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentpar {

using TokenSeq = std::vector<std::string>;

// One hypothesis scored against a single reference.
struct EvalPair {
  TokenSeq hypothesis;
  TokenSeq reference;
};

TokenSeq WhitespaceTokens(std::string_view text);

// Strips inline sentiment tags from both sides, then splits on whitespace.
EvalPair MakeEvalPair(std::string_view hypothesis, std::string_view reference);

// Reads two line-aligned files. Throws AlignmentError on differing line
// counts.
std::vector<EvalPair> ReadEvalPairs(const std::string &hypothesis_path,
                                    const std::string &reference_path);

struct BleuOptions {
  int max_n = 4;
  // Add-one smoothing of the n >= 2 precisions. Off by default.
  bool smooth = false;
};

struct BleuResult {
  double score = 0.0;  // [0, 1]
  std::vector<std::size_t> matches;  // clipped n-gram matches, index n - 1
  std::vector<std::size_t> totals;   // hypothesis n-grams, index n - 1
  std::vector<double> precisions;
  double brevity_penalty = 0.0;
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;
  // Set when some pooled precision was zero, forcing the score to 0.
  bool zero_precision = false;
};

// Corpus-level BLEU with clipped counts pooled over all pairs. Throws
// EmptyInputError for an empty corpus and std::invalid_argument for
// max_n < 1.
BleuResult Bleu(std::span<const EvalPair> pairs, const BleuOptions &options = {});

// Shifted blocks are at most this long.
inline constexpr std::size_t kMaxShiftLength = 10;

struct TerResult {
  std::size_t shifts = 0;
  std::size_t edits = 0;  // insertions + deletions + substitutions after shifting
  std::size_t reference_length = 0;

  std::size_t cost() const { return shifts + edits; }
  double score() const {
    return static_cast<double>(cost()) / static_cast<double>(reference_length);
  }
};

// Translation edit rate with greedy block shifts. Throws
// DivisionByZeroError for an empty reference.
TerResult Ter(const EvalPair &pair);

// Sum of costs over sum of reference lengths.
TerResult CorpusTer(std::span<const EvalPair> pairs);

// Unit-cost Levenshtein distance over tokens.
std::size_t EditDistance(std::span<const std::string> a,
                         std::span<const std::string> b);

struct RatingRecord {
  std::string record_id;
  int adequacy = 0;  // 1-5
  int fluency = 0;   // 1-5
};

struct RatingSummary {
  std::size_t count = 0;
  double mean_adequacy = 0.0;
  double mean_fluency = 0.0;
};

// "record_id<TAB>adequacy<TAB>fluency" lines. Scores outside 1-5 are a
// FormatError; malformed lines a LineError.
std::vector<RatingRecord> ParseRatings(std::string_view text,
                                       const std::string &source_name);
RatingSummary Summarize(std::span<const RatingRecord> ratings);

}  // namespace sentpar

#endif  // SENTPAR_MT_METRICS_H_
