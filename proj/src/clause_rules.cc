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

#include "sentpar/clause_rules.h"

#include <charconv>
#include <map>
#include <stdexcept>

#include "sentpar/errors.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace {

struct Run {
  std::string_view label;
  std::size_t length;
};

std::vector<Run> Runs(const PhraseSequence &seq) {
  std::vector<Run> runs;
  for (const std::string &label : seq) {
    if (!runs.empty() && runs.back().label == label)
      ++runs.back().length;
    else
      runs.push_back({label, 1});
  }
  return runs;
}

// Leaf span [begin, end) of every node labeled `label`, plus the positions of
// comma tokens.
struct SpanScan {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::vector<std::size_t> commas;
};

std::size_t ScanSpans(const ParseTree &node, std::string_view label,
                      std::size_t offset, SpanScan *scan) {
  if (node.is_leaf()) {
    if (*node.token == ",") scan->commas.push_back(offset);
    return offset + 1;
  }
  std::size_t end = offset;
  for (const ParseTree &child : node.children)
    end = ScanSpans(child, label, end, scan);
  if (node.label == label) scan->spans.emplace_back(offset, end);
  return end;
}

double SafeRatio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

std::string PhraseSeqRule::SurfaceForm() const {
  std::string out;
  for (const PatternItem &item : pattern) {
    if (!out.empty()) out.push_back(' ');
    out.append(item.label);
    if (item.one_or_more) out.push_back('*');
  }
  return out;
}

double Confidence(std::size_t match_count, std::size_t total) {
  if (total == 0) throw DivisionByZeroError("confidence over an empty mining set");
  if (match_count > total)
    throw std::invalid_argument("match count exceeds mining-set size");
  return static_cast<double>(match_count) / static_cast<double>(total);
}

RuleSet MineRules(std::span<const PhraseSequence> simple_sequences) {
  if (simple_sequences.empty())
    throw EmptyInputError("empty mining set: no simple-sentence sequences");

  RuleSet result;
  result.total = simple_sequences.size();
  std::map<std::vector<std::string_view>, std::size_t> index_of_shape;
  for (const PhraseSequence &seq : simple_sequences) {
    std::vector<Run> runs = Runs(seq);
    std::vector<std::string_view> shape;
    for (const Run &r : runs) shape.push_back(r.label);
    auto [it, inserted] =
        index_of_shape.emplace(std::move(shape), result.rules.size());
    if (inserted) {
      PhraseSeqRule rule;
      for (const Run &r : runs) rule.pattern.push_back({std::string(r.label), false});
      result.rules.push_back(std::move(rule));
    }
    PhraseSeqRule &rule = result.rules[it->second];
    for (std::size_t i = 0; i < runs.size(); ++i)
      if (runs[i].length > 1) rule.pattern[i].one_or_more = true;
  }
  // Empty sequences have an empty shape; they cannot form a rule.
  std::erase_if(result.rules,
                [](const PhraseSeqRule &r) { return r.pattern.empty(); });

  for (PhraseSeqRule &rule : result.rules) {
    for (const PhraseSequence &seq : simple_sequences)
      if (Matches(rule, seq)) ++rule.match_count;
    rule.confidence = Confidence(rule.match_count, result.total);
  }
  return result;
}

bool Matches(std::span<const PatternItem> pattern, const PhraseSequence &seq) {
  const std::size_t m = pattern.size();
  // live[p]: the first p pattern items can account for the prefix read so far.
  std::vector<char> live(m + 1, 0), next(m + 1, 0);
  live[0] = 1;
  for (const std::string &label : seq) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::size_t p = 0; p <= m; ++p) {
      if (!live[p]) continue;
      if (p < m && pattern[p].label == label) next[p + 1] = any = true;
      if (p > 0 && pattern[p - 1].one_or_more && pattern[p - 1].label == label)
        next[p] = any = true;
    }
    if (!any) return false;
    live.swap(next);
  }
  return live[m] != 0;
}

std::vector<PatternItem> ParsePattern(std::string_view surface) {
  std::vector<PatternItem> pattern;
  for (std::string_view part : Split(Trim(surface), ' ')) {
    if (part.empty()) continue;
    PatternItem item;
    if (part.size() > 1 && part.back() == '*') {
      item.one_or_more = true;
      part.remove_suffix(1);
    }
    item.label = std::string(part);
    pattern.push_back(std::move(item));
  }
  return pattern;
}

std::string FormatRules(const RuleSet &rules) {
  std::string out = "# total\t" + std::to_string(rules.total) + "\n";
  for (const PhraseSeqRule &rule : rules.rules) {
    out += rule.SurfaceForm();
    out += '\t';
    out += std::to_string(rule.match_count);
    out += '\t';
    out += FormatFixed(rule.confidence * 100.0, 2);
    out += '\n';
  }
  return out;
}

RuleSet ParseRules(std::string_view text, std::string_view source_name) {
  const std::string source(source_name);
  RuleSet rules;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (line.front() == '#') {
      if (fields.size() == 2 && Trim(fields[0]) == "# total") {
        auto [p, ec] = std::from_chars(fields[1].data(),
                                       fields[1].data() + fields[1].size(),
                                       rules.total);
        if (ec != std::errc() || p != fields[1].data() + fields[1].size())
          throw LineError(source, line_no, "bad total");
      }
      continue;
    }
    if (fields.size() != 3)
      throw LineError(source, line_no, "expected pattern<TAB>count<TAB>percent");
    PhraseSeqRule rule;
    rule.pattern = ParsePattern(fields[0]);
    if (rule.pattern.empty()) throw LineError(source, line_no, "empty pattern");
    auto [p, ec] = std::from_chars(fields[1].data(),
                                   fields[1].data() + fields[1].size(),
                                   rule.match_count);
    if (ec != std::errc() || p != fields[1].data() + fields[1].size())
      throw LineError(source, line_no, "bad match count");
    double percent = 0.0;
    auto [q, ec2] = std::from_chars(fields[2].data(),
                                    fields[2].data() + fields[2].size(), percent);
    if (ec2 != std::errc() || q != fields[2].data() + fields[2].size() ||
        percent < 0.0 || percent > 100.0)
      throw LineError(source, line_no, "bad confidence percent");
    rule.confidence = percent / 100.0;
    rules.rules.push_back(std::move(rule));
  }
  if (rules.total > 0)
    for (PhraseSeqRule &rule : rules.rules)
      if (rule.match_count <= rules.total)
        rule.confidence = Confidence(rule.match_count, rules.total);
  return rules;
}

std::string_view ToString(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::kSimple: return "Simple";
    case ComplexityClass::kComplex: return "Complex";
    case ComplexityClass::kCompound: return "Compound";
    case ComplexityClass::kUntagged: return "Untagged";
  }
  return "Untagged";
}

std::optional<ComplexityClass> ParseComplexityClass(std::string_view s) {
  for (ComplexityClass c : {ComplexityClass::kSimple, ComplexityClass::kComplex,
                            ComplexityClass::kCompound, ComplexityClass::kUntagged})
    if (ToString(c) == s) return c;
  return std::nullopt;
}

bool ContainsLabel(const ParseTree &tree, std::string_view label) {
  if (tree.label == label) return true;
  for (const ParseTree &child : tree.children)
    if (ContainsLabel(child, label)) return true;
  return false;
}

bool IsComplex(const ParseTree &tree) {
  SpanScan scan;
  ScanSpans(tree, "SBAR", 0, &scan);
  for (auto [begin, end] : scan.spans) {
    if (begin != 0) return true;
    for (std::size_t comma : scan.commas)
      if (comma >= end) return true;
  }
  return false;
}

bool IsCompound(const ParseTree &tree) {
  const auto &kids = tree.children;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].label != "CC") continue;
    std::size_t j = i + 1;
    while (j < kids.size() && IsPunctuationLabel(kids[j].label)) ++j;
    if (j < kids.size() && kids[j].label == "S") return true;
  }
  for (const ParseTree &child : kids)
    if (IsCompound(child)) return true;
  return false;
}

ComplexityClass Classify(const ParseTree &tree, const RuleSet &rules) {
  if (IsComplex(tree)) return ComplexityClass::kComplex;
  if (IsCompound(tree)) return ComplexityClass::kCompound;
  if (tree.is_leaf() || ContainsLabel(tree, "SBAR"))
    return ComplexityClass::kUntagged;
  PhraseSequence seq = PhraseSequenceOf(tree);
  for (const PhraseSeqRule &rule : rules.rules)
    if (Matches(rule, seq)) return ComplexityClass::kSimple;
  return ComplexityClass::kUntagged;
}

ConfusionMetrics EvaluateMatrix(const ConfusionMatrix &matrix) {
  ConfusionMetrics m;
  m.matrix = matrix;
  const double tn = static_cast<double>(matrix[0][0]);
  const double fp = static_cast<double>(matrix[0][1]);
  const double fn = static_cast<double>(matrix[1][0]);
  const double tp = static_cast<double>(matrix[1][1]);
  const double total = tn + fp + fn + tp;
  if (total == 0.0) throw EmptyInputError("empty confusion matrix");

  m.precision = SafeRatio(tp, tp + fp);
  m.recall = SafeRatio(tp, tp + fn);
  m.accuracy = (tp + tn) / total;
  m.f1 = SafeRatio(2.0 * m.precision * m.recall, m.precision + m.recall);

  // Chance agreement from the gold (row) and predicted (column) marginals.
  const double p_o = m.accuracy;
  const double p_e = ((tn + fp) * (tn + fn) + (fn + tp) * (fp + tp)) /
                     (total * total);
  m.kappa = p_e >= 1.0 ? 1.0 : (p_o - p_e) / (1.0 - p_e);
  return m;
}

ConfusionMetrics Evaluate(std::span<const ComplexityClass> predicted,
                          std::span<const BinaryLabel> gold) {
  if (predicted.size() != gold.size())
    throw AlignmentError("prediction/gold length mismatch: " +
                         std::to_string(predicted.size()) + " vs " +
                         std::to_string(gold.size()));
  if (predicted.empty()) throw EmptyInputError("nothing to evaluate");
  ConfusionMatrix matrix{};
  for (std::size_t i = 0; i < predicted.size(); ++i)
    ++matrix[static_cast<int>(gold[i])][static_cast<int>(Binarize(predicted[i]))];
  return EvaluateMatrix(matrix);
}

}  // namespace sentpar
