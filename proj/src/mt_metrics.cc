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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sentpar/errors.h"
#include "sentpar/sentiment.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace {

using Ids = std::vector<int>;

// Maps both sides of a pair onto a shared dense vocabulary.
class Interner {
 public:
  Ids Encode(std::span<const std::string> tokens) {
    Ids ids;
    ids.reserve(tokens.size());
    for (const std::string &t : tokens) {
      auto [it, inserted] = index_.emplace(t, static_cast<int>(index_.size()));
      ids.push_back(it->second);
    }
    return ids;
  }

 private:
  std::unordered_map<std::string, int> index_;
};

std::map<Ids, std::size_t> CountNgrams(const Ids &seq, std::size_t n) {
  std::map<Ids, std::size_t> counts;
  if (seq.size() < n) return counts;
  for (std::size_t i = 0; i + n <= seq.size(); ++i)
    ++counts[Ids(seq.begin() + i, seq.begin() + i + n)];
  return counts;
}

std::size_t Levenshtein(const Ids &a, const Ids &b, std::vector<std::size_t> &row) {
  row.resize(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
      diag = up;
    }
  }
  return row[b.size()];
}

// Marks hypothesis and reference positions that are exact matches on one
// optimal alignment. Backtrace prefers the diagonal.
void MatchedPositions(const Ids &hyp, const Ids &ref, std::vector<char> *hyp_matched,
                      std::vector<char> *ref_matched) {
  const std::size_t n = hyp.size(), m = ref.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [m, &d](std::size_t i, std::size_t j) -> std::size_t & {
    return d[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1,
                           at(i - 1, j - 1) + (hyp[i - 1] != ref[j - 1])});
  hyp_matched->assign(n, 0);
  ref_matched->assign(m, 0);
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    std::size_t sub = hyp[i - 1] != ref[j - 1];
    if (at(i, j) == at(i - 1, j - 1) + sub) {
      if (!sub) (*hyp_matched)[i - 1] = (*ref_matched)[j - 1] = 1;
      --i;
      --j;
    } else if (at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      --j;
    }
  }
}

bool AllSet(const std::vector<char> &flags, std::size_t begin, std::size_t len) {
  return std::all_of(flags.begin() + begin, flags.begin() + begin + len,
                     [](char f) { return f != 0; });
}

// True if ref holds `hyp[begin, begin+len)` at a position that is not
// already fully matched.
bool MatchesMisalignedRefSpan(const Ids &hyp, std::size_t begin, std::size_t len,
                              const Ids &ref, const std::vector<char> &ref_matched) {
  if (len > ref.size()) return false;
  for (std::size_t j = 0; j + len <= ref.size(); ++j) {
    if (!std::equal(hyp.begin() + begin, hyp.begin() + begin + len,
                    ref.begin() + j))
      continue;
    if (!AllSet(ref_matched, j, len)) return true;
  }
  return false;
}

Ids ApplyShift(const Ids &seq, std::size_t begin, std::size_t len,
               std::size_t dest) {
  Ids rest;
  rest.reserve(seq.size());
  rest.insert(rest.end(), seq.begin(), seq.begin() + begin);
  rest.insert(rest.end(), seq.begin() + begin + len, seq.end());
  rest.insert(rest.begin() + dest, seq.begin() + begin, seq.begin() + begin + len);
  return rest;
}

TerResult GreedyTer(Ids hyp, const Ids &ref) {
  TerResult result;
  result.reference_length = ref.size();
  std::vector<std::size_t> row;
  std::vector<char> hyp_matched, ref_matched;
  std::size_t distance = Levenshtein(hyp, ref, row);
  for (;;) {
    MatchedPositions(hyp, ref, &hyp_matched, &ref_matched);
    std::size_t best_distance = distance;
    Ids best;
    const std::size_t n = hyp.size();
    for (std::size_t begin = 0; begin < n; ++begin) {
      for (std::size_t len = 1; len <= kMaxShiftLength && begin + len <= n; ++len) {
        if (AllSet(hyp_matched, begin, len)) continue;
        if (!MatchesMisalignedRefSpan(hyp, begin, len, ref, ref_matched)) continue;
        // dest indexes the sequence with the block removed.
        for (std::size_t dest = 0; dest + len <= n; ++dest) {
          if (dest == begin) continue;
          Ids shifted = ApplyShift(hyp, begin, len, dest);
          std::size_t d = Levenshtein(shifted, ref, row);
          if (d < best_distance) {
            best_distance = d;
            best = std::move(shifted);
          }
        }
      }
    }
    if (best_distance >= distance) break;
    hyp = std::move(best);
    distance = best_distance;
    ++result.shifts;
  }
  result.edits = distance;
  return result;
}

}  // namespace

TokenSeq WhitespaceTokens(std::string_view text) {
  TokenSeq tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    if (pos > start) tokens.emplace_back(text.substr(start, pos - start));
  }
  return tokens;
}

EvalPair MakeEvalPair(std::string_view hypothesis, std::string_view reference) {
  return {WhitespaceTokens(Detag(hypothesis)), WhitespaceTokens(Detag(reference))};
}

std::vector<EvalPair> ReadEvalPairs(const std::string &hypothesis_path,
                                    const std::string &reference_path) {
  std::string hyp_text = ReadFile(hypothesis_path);
  std::string ref_text = ReadFile(reference_path);
  std::vector<std::string_view> hyps = SplitLines(hyp_text);
  std::vector<std::string_view> refs = SplitLines(ref_text);
  if (hyps.size() != refs.size())
    throw AlignmentError(hypothesis_path + " has " + std::to_string(hyps.size()) +
                         " lines but " + reference_path + " has " +
                         std::to_string(refs.size()));
  std::vector<EvalPair> pairs;
  pairs.reserve(hyps.size());
  for (std::size_t i = 0; i < hyps.size(); ++i)
    pairs.push_back(MakeEvalPair(hyps[i], refs[i]));
  return pairs;
}

BleuResult Bleu(std::span<const EvalPair> pairs, const BleuOptions &options) {
  if (pairs.empty()) throw EmptyInputError("BLEU over an empty corpus");
  if (options.max_n < 1) throw std::invalid_argument("BLEU max_n must be >= 1");
  const std::size_t max_n = static_cast<std::size_t>(options.max_n);

  BleuResult r;
  r.matches.assign(max_n, 0);
  r.totals.assign(max_n, 0);
  for (const EvalPair &pair : pairs) {
    Interner interner;
    Ids hyp = interner.Encode(pair.hypothesis);
    Ids ref = interner.Encode(pair.reference);
    r.hypothesis_length += hyp.size();
    r.reference_length += ref.size();
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::map<Ids, std::size_t> ref_counts = CountNgrams(ref, n);
      for (const auto &[gram, count] : CountNgrams(hyp, n)) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) r.matches[n - 1] += std::min(count, it->second);
      }
      if (hyp.size() >= n) r.totals[n - 1] += hyp.size() - n + 1;
    }
  }

  r.precisions.assign(max_n, 0.0);
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    double matched = static_cast<double>(r.matches[n - 1]);
    double total = static_cast<double>(r.totals[n - 1]);
    if (options.smooth && n >= 2) {
      matched += 1.0;
      total += 1.0;
    }
    double p = total > 0.0 ? matched / total : 0.0;
    r.precisions[n - 1] = p;
    if (p == 0.0) r.zero_precision = true;
    else log_sum += std::log(p);
  }

  if (r.hypothesis_length == 0) {
    r.brevity_penalty = 0.0;
  } else if (r.hypothesis_length >= r.reference_length) {
    r.brevity_penalty = 1.0;
  } else {
    r.brevity_penalty = std::exp(1.0 - static_cast<double>(r.reference_length) /
                                           static_cast<double>(r.hypothesis_length));
  }
  r.score = r.zero_precision
                ? 0.0
                : r.brevity_penalty * std::exp(log_sum / static_cast<double>(max_n));
  return r;
}

TerResult Ter(const EvalPair &pair) {
  if (pair.reference.empty())
    throw DivisionByZeroError("TER is undefined for an empty reference");
  Interner interner;
  Ids hyp = interner.Encode(pair.hypothesis);
  Ids ref = interner.Encode(pair.reference);
  return GreedyTer(std::move(hyp), ref);
}

TerResult CorpusTer(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw EmptyInputError("TER over an empty corpus");
  TerResult total;
  for (const EvalPair &pair : pairs) {
    TerResult r = Ter(pair);
    total.shifts += r.shifts;
    total.edits += r.edits;
    total.reference_length += r.reference_length;
  }
  return total;
}

std::size_t EditDistance(std::span<const std::string> a,
                         std::span<const std::string> b) {
  Interner interner;
  Ids x = interner.Encode(a);
  Ids y = interner.Encode(b);
  std::vector<std::size_t> row;
  return Levenshtein(x, y, row);
}

std::vector<RatingRecord> ParseRatings(std::string_view text,
                                       const std::string &source_name) {
  std::vector<RatingRecord> ratings;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 3 || fields[0].empty())
      throw LineError(source_name, line_no,
                      "expected record_id<TAB>adequacy<TAB>fluency");
    RatingRecord rec;
    rec.record_id = std::string(fields[0]);
    int *targets[2] = {&rec.adequacy, &rec.fluency};
    for (int k = 0; k < 2; ++k) {
      std::string_view f = fields[k + 1];
      auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), *targets[k]);
      if (ec != std::errc() || p != f.data() + f.size())
        throw LineError(source_name, line_no, "non-integer rating '" +
                                                  std::string(f) + "'");
      if (*targets[k] < 1 || *targets[k] > 5)
        throw FormatError(source_name, line_no, "rating outside 1-5");
    }
    ratings.push_back(std::move(rec));
  }
  return ratings;
}

RatingSummary Summarize(std::span<const RatingRecord> ratings) {
  RatingSummary s;
  s.count = ratings.size();
  if (ratings.empty()) return s;
  for (const RatingRecord &r : ratings) {
    s.mean_adequacy += r.adequacy;
    s.mean_fluency += r.fluency;
  }
  s.mean_adequacy /= static_cast<double>(s.count);
  s.mean_fluency /= static_cast<double>(s.count);
  return s;
}

}  // namespace sentpar
