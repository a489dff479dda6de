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

#include "sentpar/mt_metrics.h"

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sentpar/errors.h"
#include "sentpar/text_io.h"

namespace sentpar {
namespace {

EvalPair P(std::string_view hyp, std::string_view ref) { return MakeEvalPair(hyp, ref); }

TEST(BleuTest, IdentityCorpus) {
  std::vector<EvalPair> pairs = {P("the cat sat on the mat", "the cat sat on the mat"),
                                 P("a b c d e", "a b c d e")};
  BleuResult r = Bleu(pairs);
  EXPECT_DOUBLE_EQ(r.score, 1.0);
  EXPECT_DOUBLE_EQ(r.brevity_penalty, 1.0);
  EXPECT_FALSE(r.zero_precision);
}

TEST(BleuTest, ClippedUnigramPrecision) {
  std::vector<EvalPair> pairs = {
      P("the the the the the the the", "the cat is on the mat")};
  BleuResult r = Bleu(pairs, {.max_n = 1});
  EXPECT_EQ(r.matches[0], 2u);
  EXPECT_EQ(r.totals[0], 7u);
  EXPECT_NEAR(r.score, 2.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.score * 100, 28.57, 0.01);
}

TEST(BleuTest, BrevityPenalty) {
  std::vector<EvalPair> pairs = {P("a b c d", "a b c d e f g h")};
  BleuResult r = Bleu(pairs);
  EXPECT_NEAR(r.brevity_penalty, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(r.score, std::exp(-1.0), 1e-12);
}

TEST(BleuTest, ZeroPrecisionAndSmoothing) {
  std::vector<EvalPair> pairs = {P("a b c", "c b a")};
  BleuResult r = Bleu(pairs);
  EXPECT_TRUE(r.zero_precision);
  EXPECT_DOUBLE_EQ(r.score, 0.0);
  BleuResult s = Bleu(pairs, {.smooth = true});
  EXPECT_GT(s.score, 0.0);
  EXPECT_DOUBLE_EQ(s.precisions[0], 1.0);
  EXPECT_DOUBLE_EQ(s.precisions[1], 1.0 / 3.0);
}

TEST(BleuTest, EmptyHypothesis) {
  std::vector<EvalPair> pairs = {P("", "a b")};
  BleuResult r = Bleu(pairs);
  EXPECT_DOUBLE_EQ(r.score, 0.0);
  EXPECT_DOUBLE_EQ(r.brevity_penalty, 0.0);
}

TEST(BleuTest, Errors) {
  EXPECT_THROW(Bleu({}), EmptyInputError);
  std::vector<EvalPair> pairs = {P("a", "a")};
  EXPECT_THROW(Bleu(pairs, {.max_n = 0}), std::invalid_argument);
}

TEST(BleuTest, TagsAreStrippedBeforeScoring) {
  EvalPair p = P("he admired\\POS them", "he admired them");
  EXPECT_EQ(p.hypothesis, p.reference);
}

TEST(BleuPropertyTest, InvariantUnderPairReordering) {
  std::mt19937 rng(31);
  std::vector<EvalPair> pairs;
  for (int i = 0; i < 20; ++i) {
    EvalPair p;
    for (int k = 0; k < 8; ++k) p.hypothesis.push_back(std::string(1, 'a' + rng() % 4));
    for (int k = 0; k < 8; ++k) p.reference.push_back(std::string(1, 'a' + rng() % 4));
    pairs.push_back(p);
  }
  double score = Bleu(pairs).score;
  std::shuffle(pairs.begin(), pairs.end(), rng);
  EXPECT_DOUBLE_EQ(Bleu(pairs).score, score);
}

TEST(BleuPropertyTest, AgreesWithBruteForceCounter) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EvalPair> pairs(1);
    std::size_t hl = 1 + rng() % 10, rl = 1 + rng() % 10;
    for (std::size_t k = 0; k < hl; ++k)
      pairs[0].hypothesis.push_back(std::string(1, 'a' + rng() % 3));
    for (std::size_t k = 0; k < rl; ++k)
      pairs[0].reference.push_back(std::string(1, 'a' + rng() % 3));
    for (int n = 1; n <= 4; ++n)
      ASSERT_NEAR(Bleu(pairs, {.max_n = n}).score, oracle::BruteForceBleu(pairs, n), 1e-9);
  }
}

TEST(TerTest, Examples) {
  EXPECT_DOUBLE_EQ(Ter(P("a b c d", "a b c d")).score(), 0.0);
  TerResult swap = Ter(P("a b d c", "a b c d"));
  EXPECT_EQ(swap.cost(), 1u);
  EXPECT_DOUBLE_EQ(swap.score(), 0.25);
  EXPECT_NEAR(Ter(P("a x c", "a b c")).score(), 1.0 / 3.0, 1e-12);
  TerResult block = Ter(P("d e f a b c", "a b c d e f"));
  EXPECT_EQ(block.shifts, 1u);
  EXPECT_EQ(block.edits, 0u);
  EXPECT_EQ(Ter(P("", "a b")).cost(), 2u);
}

TEST(TerTest, EmptyReference) {
  EXPECT_THROW(Ter(P("a", "")), DivisionByZeroError);
  EXPECT_THROW(CorpusTer({}), EmptyInputError);
}

TEST(TerTest, CorpusIsMicroAveraged) {
  std::vector<EvalPair> pairs = {P("a b d c", "a b c d"), P("x", "y z")};
  TerResult r = CorpusTer(pairs);
  EXPECT_EQ(r.reference_length, 6u);
  EXPECT_EQ(r.cost(), 3u);
  EXPECT_DOUBLE_EQ(r.score(), 0.5);
}

TEST(EditDistanceTest, Examples) {
  TokenSeq a = {"k", "i", "t", "t", "e", "n"}, b = {"s", "i", "t", "t", "i", "n", "g"};
  EXPECT_EQ(EditDistance(a, b), 3u);
  EXPECT_EQ(EditDistance(a, {}), 6u);
}

TEST(TerPropertyTest, NeverExceedsEditDistanceRate) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    EvalPair p;
    std::size_t hl = rng() % 12, rl = 1 + rng() % 12;
    for (std::size_t k = 0; k < hl; ++k) p.hypothesis.push_back(std::string(1, 'a' + rng() % 4));
    for (std::size_t k = 0; k < rl; ++k) p.reference.push_back(std::string(1, 'a' + rng() % 4));
    TerResult r = Ter(p);
    ASSERT_LE(r.cost(), EditDistance(p.hypothesis, p.reference));
    ASSERT_GE(r.score(), 0.0);
  }
}

TEST(TerPropertyTest, PermutationsCostAtMostReferenceLength) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    EvalPair p;
    std::size_t len = 1 + rng() % 10;
    for (std::size_t k = 0; k < len; ++k) p.reference.push_back(std::string(1, 'a' + rng() % 5));
    p.hypothesis = p.reference;
    std::shuffle(p.hypothesis.begin(), p.hypothesis.end(), rng);
    TerResult r = Ter(p);
    ASSERT_LE(r.score(), 1.0);
    ASSERT_EQ(r.edits + r.shifts == 0, p.hypothesis == p.reference);
  }
}

TEST(TerPropertyTest, BoundedByOneShiftOptimum) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Seq h, r;
    std::size_t hl = rng() % 6, rl = 1 + rng() % 6;
    for (std::size_t k = 0; k < hl; ++k) h.push_back(static_cast<int>(rng() % 3));
    for (std::size_t k = 0; k < rl; ++k) r.push_back(static_cast<int>(rng() % 3));
    TerResult g = Ter({oracle::ToTokens(h), oracle::ToTokens(r)});
    auto one = oracle::ReachableByShifts(h, 1, kMaxShiftLength);
    std::size_t best_one = oracle::ExhaustiveTerCost(one, r);
    ASSERT_LE(g.cost(), oracle::Levenshtein(h, r));
    if (g.shifts == 0) ASSERT_EQ(g.cost(), oracle::Levenshtein(h, r));
    if (g.shifts <= 1) ASSERT_GE(g.cost(), best_one);
  }
}

TEST(RatingsTest, ParseAndSummarize) {
  std::vector<RatingRecord> r = ParseRatings("1\t5\t4\n\n2\t3\t2\n", "ratings.tsv");
  ASSERT_EQ(r.size(), 2u);
  RatingSummary s = Summarize(r);
  EXPECT_EQ(s.count, 2u);
  EXPECT_DOUBLE_EQ(s.mean_adequacy, 4.0);
  EXPECT_DOUBLE_EQ(s.mean_fluency, 3.0);
  EXPECT_EQ(Summarize({}).count, 0u);
}

TEST(RatingsTest, Errors) {
  EXPECT_THROW(ParseRatings("1\t5\n", "r"), LineError);
  EXPECT_THROW(ParseRatings("1\tfive\t4\n", "r"), LineError);
  EXPECT_THROW(ParseRatings("1\t6\t4\n", "r"), FormatError);
  EXPECT_THROW(ParseRatings("1\t0\t4\n", "r"), FormatError);
}

TEST(ReadEvalPairsTest, LineCountMismatch) {
  auto dir = std::filesystem::temp_directory_path() / "sentpar_eval_pairs";
  std::filesystem::create_directories(dir);
  WriteFile((dir / "h.txt").string(), "a b\nc d\n");
  WriteFile((dir / "r.txt").string(), "a b\n");
  EXPECT_THROW(ReadEvalPairs((dir / "h.txt").string(), (dir / "r.txt").string()),
               AlignmentError);
  WriteFile((dir / "r.txt").string(), "a b\nc\\NEG d\n");
  auto pairs = ReadEvalPairs((dir / "h.txt").string(), (dir / "r.txt").string());
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].reference, (TokenSeq{"c", "d"}));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace sentpar
