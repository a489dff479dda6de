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

#ifndef SENTPAR_PIPELINE_H_
#define SENTPAR_PIPELINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentpar/clause_rules.h"
#include "sentpar/parallel_filter.h"
#include "sentpar/sentiment.h"
#include "sentpar/translation.h"

namespace sentpar {

struct LexiconSource {
  std::string path;
  LexiconFormat format = LexiconFormat::kLabeled;
};

// Flat "key = value" configuration. Relative paths are resolved against the
// directory holding the config file.
struct PipelineConfig {
  std::string corpus;
  std::string parses;
  std::string rules;       // optional when mining_set is given
  std::string mining_set;  // parse file of known simple sentences
  std::string output_dir = "out";
  std::vector<LexiconSource> lexicons_en;
  std::vector<LexiconSource> lexicons_bn;

  std::string provider = "none";  // none | mock | http
  std::string provider_dictionary;
  std::string provider_url;
  std::string provider_token;
  std::string provider_cache;  // defaults to <output_dir>/translation_cache.tsv
  int provider_max_attempts = 3;
  int provider_min_interval_ms = 0;

  bool stage_translate = true;
  bool stage_classify = true;
  bool stage_sentiment = true;
  bool stage_evaluate = false;
  std::string eval_hypothesis;
  std::string eval_reference;

  std::size_t heldout = 0;  // pairs sampled out of every dataset
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  std::string OutputPath(std::string_view name) const;
};

// Throws ConfigError on unknown keys, bad values or missing '='.
PipelineConfig ParseConfig(std::string_view text, const std::string &base_dir,
                           const std::string &source_name);
PipelineConfig LoadConfig(const std::string &path);

// Checks that every input file referenced by an enabled stage exists.
void ValidateConfig(const PipelineConfig &config);

// Per-stage counts. Everything is zero until the stage runs.
struct RunReport {
  // Collection and translation.
  std::size_t records_in = 0;
  std::size_t pretranslated = 0;
  std::size_t translated = 0;
  std::size_t from_cache = 0;
  std::size_t failed = 0;
  std::size_t untranslated = 0;

  // Complexity classes over translated records.
  bool classified = false;
  std::size_t unparsed = 0;
  std::map<ComplexityClass, std::size_t> classes;
  std::size_t mined_rules = 0;

  // Sentiment tagging and filtering.
  bool sentiment = false;
  std::size_t tagged_pairs = 0;
  FilterStats filter;

  // Emitted datasets.
  std::size_t heldout = 0;
  std::map<std::string, std::size_t> datasets;

  std::optional<double> bleu;  // x100
  std::optional<double> ter;   // x100
  std::size_t eval_pairs = 0;

  std::string ToText() const;
};

// Stages read and write files under config.output_dir so each can be rerun
// on its own. A missing input artifact raises ConfigError naming it.
void StageIngest(const PipelineConfig &config, RunReport *report);
void StageTranslate(const PipelineConfig &config, RunReport *report,
                    TranslationProvider *provider = nullptr);
void StageMineRules(const PipelineConfig &config, RunReport *report);
void StageClassify(const PipelineConfig &config, RunReport *report);
void StageTag(const PipelineConfig &config, RunReport *report);
void StageFilter(const PipelineConfig &config, RunReport *report);
void StageSplit(const PipelineConfig &config, RunReport *report);
void StageEvaluate(const PipelineConfig &config, RunReport *report);

// All enabled stages in order; writes report.txt. `provider` overrides the
// configured translation provider when non-null.
RunReport RunPipeline(const PipelineConfig &config,
                      TranslationProvider *provider = nullptr);

struct StatsReport {
  std::size_t records = 0;
  std::map<ComplexityClass, std::size_t> classes;  // needs a classes file
  std::array<std::size_t, kNumParallelRules> per_rule{};
  std::size_t not_parallel = 0;
  double coverage = 0.0;     // records with a tag on either side
  double coverage_en = 0.0;
  double coverage_bn = 0.0;

  std::string ToText() const;
};

// Statistics for a two-column corpus (tagged or not). `classes_path`, when
// given, is a "record_id<TAB>class" file joined through the ids sidecar.
StatsReport CorpusStats(const std::string &path,
                        const std::string &classes_path = {});

// ×100, rounded to two decimals, as shown in reports.
double ToDisplayScore(double fraction);

}  // namespace sentpar

#endif  // SENTPAR_PIPELINE_H_
