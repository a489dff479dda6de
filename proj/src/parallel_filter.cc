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

#include "sentpar/parallel_filter.h"

#include "sentpar/errors.h"

namespace sentpar {

namespace {

bool PosOnly(TagSet t) { return t == TagSet::Pos(); }
bool NegOnly(TagSet t) { return t == TagSet::Neg(); }
bool PosAndNeg(TagSet t) { return t == TagSet::Both(); }

bool R1(TagSet e, TagSet b) { return PosOnly(e) && PosOnly(b); }
bool R2(TagSet e, TagSet b) { return NegOnly(e) && NegOnly(b); }
bool R3(TagSet e, TagSet b) { return PosAndNeg(e) && PosAndNeg(b); }
bool R4(TagSet e, TagSet b) {
  return (PosAndNeg(e) && PosOnly(b)) || (PosOnly(e) && PosAndNeg(b));
}
bool R5(TagSet e, TagSet b) {
  return (PosAndNeg(e) && NegOnly(b)) || (NegOnly(e) && PosAndNeg(b));
}

}  // namespace

std::string ToString(ParallelRule rule) {
  return "R" + std::to_string(static_cast<int>(rule) + 1);
}

ParallelVerdict IsParallel(TagSet e, TagSet b) {
  using Predicate = bool (*)(TagSet, TagSet);
  static constexpr Predicate kRules[kNumParallelRules] = {R1, R2, R3, R4, R5};
  for (std::size_t i = 0; i < kNumParallelRules; ++i)
    if (kRules[i](e, b)) return {true, static_cast<ParallelRule>(i)};
  return {};
}

FilterResult FilterCorpus(std::vector<ParallelPair> pairs) {
  FilterResult result;
  result.stats.input = pairs.size();
  for (ParallelPair &pair : pairs) {
    TagSet e = pair.source.tag_set();
    TagSet b = pair.target.tag_set();
    ParallelVerdict verdict = IsParallel(e, b);
    pair.kept = verdict.parallel;
    pair.matched_rule = verdict.rule;
    if (verdict.parallel) {
      ++result.stats.kept;
      ++result.stats.per_rule[static_cast<std::size_t>(*verdict.rule)];
      if (pair.complexity) ++result.stats.kept_per_class[*pair.complexity];
      result.kept.push_back(std::move(pair));
    } else {
      ++result.stats.dropped;
      result.drop_log.push_back({pair.record_id, e, b});
    }
  }
  return result;
}

FilterResult FilterCorpus(std::span<const TaggedSentence> sources,
                          std::span<const TaggedSentence> targets,
                          std::span<const std::optional<ComplexityClass>> complexity) {
  if (sources.size() != targets.size())
    throw AlignmentError("source/target count mismatch: " +
                         std::to_string(sources.size()) + " vs " +
                         std::to_string(targets.size()));
  if (!complexity.empty() && complexity.size() != sources.size())
    throw AlignmentError("complexity list does not match corpus size");
  std::vector<ParallelPair> pairs(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    pairs[i].record_id = i + 1;
    pairs[i].source = sources[i];
    pairs[i].target = targets[i];
    if (!complexity.empty()) pairs[i].complexity = complexity[i];
  }
  return FilterCorpus(std::move(pairs));
}

std::string FilterStats::ToReport() const {
  std::string out;
  auto line = [&out](const std::string &key, std::size_t value) {
    out += key + "\t" + std::to_string(value) + "\n";
  };
  line("input", input);
  line("kept", kept);
  line("dropped", dropped);
  for (std::size_t i = 0; i < kNumParallelRules; ++i)
    line("rule." + ToString(static_cast<ParallelRule>(i)), per_rule[i]);
  for (ComplexityClass c : {ComplexityClass::kSimple, ComplexityClass::kComplex,
                            ComplexityClass::kCompound, ComplexityClass::kUntagged}) {
    auto it = kept_per_class.find(c);
    line("kept." + std::string(sentpar::ToString(c)),
         it == kept_per_class.end() ? 0 : it->second);
  }
  return out;
}

std::string FormatDropLog(std::span<const DropEntry> drops) {
  std::string out;
  for (const DropEntry &d : drops)
    out += std::to_string(d.record_id) + "\t" + d.source_tags.ToString() + "\t" +
           d.target_tags.ToString() + "\n";
  return out;
}

}  // namespace sentpar
