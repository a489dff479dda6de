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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "sentpar/clause_rules.h"
#include "sentpar/mt_metrics.h"
#include "sentpar/parallel_filter.h"
#include "sentpar/pipeline.h"
#include "sentpar/sentiment.h"
#include "sentpar/text_io.h"

namespace sentpar {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool Near(double value, double target, double tolerance) {
  return std::fabs(value - target) <= tolerance;
}

std::string Fmt(double v, int decimals) { return FormatFixed(v, decimals); }

Outcome ConfusionMetricsCriterion() {
  constexpr double kAccuracyTolPts = 0.01;
  constexpr double kKappaTol = 0.005;
  constexpr double kPrTolPts = 0.2;
  ConfusionMetrics m = EvaluateMatrix({{{1275, 90}, {220, 1291}}});
  double acc = m.accuracy * 100, p = m.precision * 100, r = m.recall * 100;
  bool ok = Near(acc, 89.22, kAccuracyTolPts) && Near(m.kappa, 0.78, kKappaTol) &&
            Near(p, 93.41, kPrTolPts) && Near(r, 85.28, kPrTolPts);
  return {ok, "accuracy " + Fmt(acc, 4) + "% kappa " + Fmt(m.kappa, 4) + " precision " +
                  Fmt(p, 2) + "% recall " + Fmt(r, 2) + "%"};
}

Outcome ParallelRulesCriterion() {
  const TagSet all[] = {TagSet(), TagSet::Pos(), TagSet::Neg(), TagSet::Both()};
  std::size_t agree = 0, symmetric = 0;
  for (TagSet e : all)
    for (TagSet b : all) {
      bool oracle = !e.empty() && !b.empty() && !(e & b).empty();
      agree += IsParallel(e, b).parallel == oracle;
      symmetric += IsParallel(e, b).parallel == IsParallel(b, e).parallel;
    }
  bool rejects = !IsParallel(TagSet(), TagSet::Pos()).parallel &&
                 !IsParallel(TagSet::Both(), TagSet()).parallel &&
                 !IsParallel(TagSet(), TagSet()).parallel &&
                 !IsParallel(TagSet::Pos(), TagSet::Neg()).parallel &&
                 !IsParallel(TagSet::Neg(), TagSet::Pos()).parallel;
  return {agree == 16 && symmetric == 16 && rejects,
          std::to_string(agree) + "/16 agree, " + std::to_string(symmetric) +
              "/16 symmetric, empty and POS/NEG rejected: " + (rejects ? "yes" : "no")};
}

Outcome ConfidenceCriterion() {
  constexpr double kSumTol = 1e-9;
  std::mt19937_64 rng(2024);
  const std::vector<std::string> labels = {"NP", "VP", "PP", "ADVP", "ADJP", "PRP"};
  std::vector<PhraseSequence> mining(1000);
  for (PhraseSequence &s : mining) {
    std::size_t len = 1 + rng() % 7;
    for (std::size_t i = 0; i < len; ++i) s.push_back(labels[rng() % labels.size()]);
  }
  RuleSet rules = MineRules(mining);
  double sum = 0.0;
  for (const PhraseSeqRule &r : rules.rules) sum += r.confidence;
  std::string shown = FormatFixed(Confidence(370, 3046) * 100.0, 2);
  char deviation[32];
  std::snprintf(deviation, sizeof deviation, "%.2e", std::fabs(sum - 1.0));
  return {Near(sum, 1.0, kSumTol) && shown == "12.15",
          std::to_string(rules.rules.size()) + " rules, |sum - 1| = " + deviation +
              ", 370/3046 shown as " + shown + "%"};
}

Outcome BleuCriterion() {
  constexpr double kExampleTol = 0.01;
  constexpr double kOracleTol = 1e-9;
  std::vector<EvalPair> identity = {
      MakeEvalPair("the cat sat on the mat", "the cat sat on the mat"),
      MakeEvalPair("ami bhat khai roj", "ami bhat khai roj")};
  std::string id_shown = FormatFixed(ToDisplayScore(Bleu(identity).score), 2);
  std::vector<EvalPair> clipped = {
      MakeEvalPair("the the the the the the the", "the cat is on the mat")};
  double clipped_score = Bleu(clipped, {.max_n = 1}).score * 100;

  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EvalPair> pairs(1);
    std::size_t hl = 1 + rng() % 10, rl = 1 + rng() % 10;
    for (std::size_t k = 0; k < hl; ++k)
      pairs[0].hypothesis.push_back(std::string(1, 'a' + rng() % 3));
    for (std::size_t k = 0; k < rl; ++k)
      pairs[0].reference.push_back(std::string(1, 'a' + rng() % 3));
    for (int n = 1; n <= 4; ++n)
      worst = std::max(worst, std::fabs(Bleu(pairs, {.max_n = n}).score -
                                        oracle::BruteForceBleu(pairs, n)));
  }
  bool ok = id_shown == "100.00" && Near(clipped_score, 28.57, kExampleTol) &&
            worst <= kOracleTol;
  char worst_text[32];
  std::snprintf(worst_text, sizeof worst_text, "%.2e", worst);
  return {ok, "identity " + id_shown + ", clipped unigram " + Fmt(clipped_score, 4) +
                  ", max oracle deviation " + worst_text};
}

std::vector<oracle::Seq> AllSequences(std::size_t max_len, int alphabet) {
  std::vector<oracle::Seq> out = {{}};
  std::vector<oracle::Seq> layer = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<oracle::Seq> next;
    for (const oracle::Seq &s : layer)
      for (int a = 0; a < alphabet; ++a) {
        oracle::Seq t = s;
        t.push_back(a);
        next.push_back(t);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Outcome TerCriterion() {
  constexpr double kMaxSeconds = 60.0;
  auto start = std::chrono::steady_clock::now();

  std::vector<oracle::Seq> seqs = AllSequences(5, 3);
  std::size_t pairs = 0, mismatches = 0;
  std::string example;
  for (const oracle::Seq &h : seqs) {
    auto reachable = oracle::ReachableByShifts(h, 2, kMaxShiftLength);
    TokenSeq ht = oracle::ToTokens(h);
    for (const oracle::Seq &r : seqs) {
      if (r.empty()) continue;
      ++pairs;
      std::size_t greedy = Ter({ht, oracle::ToTokens(r)}).cost();
      std::size_t best = oracle::ExhaustiveTerCost(reachable, r);
      if (greedy != best) {
        ++mismatches;
        if (example.empty()) {
          for (int x : h) example += static_cast<char>('a' + x);
          example += "/";
          for (int x : r) example += static_cast<char>('a' + x);
          example += " greedy " + std::to_string(greedy) + " exhaustive " +
                     std::to_string(best);
        }
      }
    }
  }

  std::mt19937_64 rng(1234);
  std::size_t above_ed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    EvalPair p;
    std::size_t hl = rng() % 16, rl = 1 + rng() % 16;
    for (std::size_t k = 0; k < hl; ++k) p.hypothesis.push_back(std::string(1, 'a' + rng() % 4));
    for (std::size_t k = 0; k < rl; ++k) p.reference.push_back(std::string(1, 'a' + rng() % 4));
    double ed_rate = static_cast<double>(EditDistance(p.hypothesis, p.reference)) /
                     static_cast<double>(p.reference.size());
    above_ed += Ter(p).score() > ed_rate;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string detail = std::to_string(pairs - mismatches) + "/" + std::to_string(pairs) +
                       " pairs equal exhaustive";
  if (!example.empty()) detail += " (first mismatch " + example + ")";
  detail += ", " + std::to_string(above_ed) + "/1000 above ED/|ref|, " + Fmt(seconds, 1) + "s";
  return {mismatches == 0 && above_ed == 0 && seconds < kMaxSeconds, detail};
}

Outcome PartitionCriterion() {
  const std::string fixture = std::string(SENTPAR_TESTDATA_DIR) + "/pipeline";
  fs::path root = fs::temp_directory_path() / "sentpar_acceptance";
  fs::remove_all(root);
  std::vector<RunReport> reports;
  for (const char *run : {"a", "b"}) {
    PipelineConfig c = LoadConfig(fixture + "/pipeline.conf");
    c.output_dir = (root / run).string();
    c.provider_cache = c.OutputPath("translation_cache.tsv");
    reports.push_back(RunPipeline(c));
  }
  std::size_t classes = 0;
  for (const auto &[c, n] : reports[0].classes) classes += n;
  std::size_t filtered = reports[0].filter.kept + reports[0].filter.dropped;
  std::size_t files = 0, differing = 0;
  for (const auto &entry : fs::directory_iterator(root / "a")) {
    ++files;
    fs::path other = root / "b" / entry.path().filename();
    if (!fs::exists(other) || ReadFile(entry.path().string()) != ReadFile(other.string()))
      ++differing;
  }
  fs::remove_all(root);
  return {classes == 10 && filtered == 10 && differing == 0 && files > 0,
          "S+C+Cp+U = " + std::to_string(classes) + ", kept+dropped = " +
              std::to_string(filtered) + ", " + std::to_string(files - differing) + "/" +
              std::to_string(files) + " outputs identical"};
}

Outcome TagRoundTripCriterion() {
  std::mt19937_64 rng(77);
  std::vector<std::string> vocab = {"শত্রু", "সে", "ভালো", "খারাপ"};
  for (int i = 0; i < 40; ++i) vocab.push_back("w" + std::to_string(i));
  const char *punct[] = {"", "", "", ".", ",", "!", "।", "?", "\""};
  auto random_lexicon = [&] {
    SentimentLexicon lex;
    for (const std::string &w : vocab)
      if (rng() % 3 == 0) lex.Add(w, TagSet::FromBits(1 + rng() % 3));
    return lex;
  };
  std::size_t round_trip = 0, monotone = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    std::size_t words = rng() % 15;
    for (std::size_t k = 0; k < words; ++k) {
      if (k > 0) s += rng() % 6 == 0 ? "  " : " ";
      s += vocab[rng() % vocab.size()];
      s += punct[rng() % std::size(punct)];
    }
    SentimentLexicon small = random_lexicon();
    std::vector<SentimentLexicon> parts = {small, random_lexicon()};
    SentimentLexicon big = Merge(parts);
    TaggedSentence a = TagSentence(s, small), b = TagSentence(s, big);
    round_trip += Detag(a.Serialize()) == s && Detag(b.Serialize()) == s;
    bool mono = a.tokens.size() == b.tokens.size();
    for (std::size_t k = 0; mono && k < a.tokens.size(); ++k)
      mono = a.tokens[k].tags.IsSubsetOf(b.tokens[k].tags);
    monotone += mono;
  }
  return {round_trip == 1000 && monotone == 1000,
          std::to_string(round_trip) + "/1000 round-trip, " + std::to_string(monotone) +
              "/1000 monotone"};
}

}  // namespace
}  // namespace sentpar

int main() {
  using sentpar::Outcome;
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"confusion-matrix metrics", sentpar::ConfusionMetricsCriterion},
      {"parallel rules equal non-empty intersection", sentpar::ParallelRulesCriterion},
      {"rule confidence normalisation", sentpar::ConfidenceCriterion},
      {"BLEU examples and brute-force oracle", sentpar::BleuCriterion},
      {"TER greedy vs exhaustive search", sentpar::TerCriterion},
      {"pipeline partition and determinism", sentpar::PartitionCriterion},
      {"tag round-trip and monotonicity", sentpar::TagRoundTripCriterion},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += !o.pass;
  }
  return failures;
}
