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

// Command-line front end for the corpus pipeline and the MT metrics.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sentpar/errors.h"
#include "sentpar/mt_metrics.h"
#include "sentpar/pipeline.h"
#include "sentpar/text_io.h"

namespace {

constexpr int kExitPipelineError = 1;
constexpr int kExitConfigError = 2;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
};

sentpar::PipelineConfig LoadEffectiveConfig(const GlobalOptions &g, bool required) {
  sentpar::PipelineConfig config;
  if (!g.config_path.empty())
    config = sentpar::LoadConfig(g.config_path);
  else if (required)
    throw sentpar::ConfigError("this command needs --config");
  else
    config = sentpar::ParseConfig("", "", "<defaults>");
  if (g.seed) config.seed = *g.seed;
  if (g.jobs) config.jobs = std::max(1u, *g.jobs);
  return config;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sentiment-tagged parallel corpus toolkit"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config_path, "Pipeline configuration file");
  app.add_option("--seed", g.seed, "Seed for held-out sampling (overrides config)");
  app.add_option("--jobs", g.jobs, "Worker threads for per-record stages");

  auto *run = app.add_subcommand("run", "Run every enabled stage");
  auto *ingest = app.add_subcommand("ingest", "Validate the raw corpus into the working corpus");
  auto *translate = app.add_subcommand("translate", "Translate records lacking a target");

  auto *mine = app.add_subcommand("mine-rules", "Mine simple-sentence phrase rules");
  std::string mine_input, mine_output;
  mine->add_option("--input", mine_input, "Parse file of simple sentences");
  mine->add_option("--output", mine_output, "Rules file to write");

  auto *classify = app.add_subcommand("classify", "Classify records by clause structure");
  auto *tag = app.add_subcommand("tag", "Tag both sides with sentiment lexicons");
  auto *filter = app.add_subcommand("filter", "Keep sentiment-parallel pairs");
  auto *split = app.add_subcommand("split", "Emit general/simple/others datasets");

  auto *stats = app.add_subcommand("stats", "Statistics for a two-column corpus");
  std::string stats_path, stats_classes;
  stats->add_option("corpus", stats_path, "Corpus TSV")->required();
  stats->add_option("--classes", stats_classes, "record_id<TAB>class file");

  std::string hyp_path, ref_path, ratings_path;
  int max_n = 4;
  bool smooth = false;
  auto *eval_bleu = app.add_subcommand("eval-bleu", "Corpus BLEU of hypotheses against references");
  eval_bleu->add_option("--hyp", hyp_path, "Hypothesis file")->required();
  eval_bleu->add_option("--ref", ref_path, "Reference file")->required();
  eval_bleu->add_option("--max-n", max_n, "Highest n-gram order")->check(CLI::PositiveNumber);
  eval_bleu->add_flag("--smooth", smooth, "Add-one smoothing for n >= 2");
  eval_bleu->add_option("--ratings", ratings_path, "Adequacy/fluency ratings TSV");
  auto *eval_ter = app.add_subcommand("eval-ter", "Corpus TER of hypotheses against references");
  eval_ter->add_option("--hyp", hyp_path, "Hypothesis file")->required();
  eval_ter->add_option("--ref", ref_path, "Reference file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    sentpar::RunReport report;
    auto stage = [&](auto &&fn) {
      sentpar::PipelineConfig config = LoadEffectiveConfig(g, true);
      fn(config);
      std::cout << report.ToText();
    };

    if (*run) {
      sentpar::PipelineConfig config = LoadEffectiveConfig(g, true);
      std::cout << sentpar::RunPipeline(config).ToText();
    } else if (*ingest) {
      stage([&](const auto &c) { sentpar::StageIngest(c, &report); });
    } else if (*translate) {
      stage([&](const auto &c) { sentpar::StageTranslate(c, &report); });
    } else if (*mine) {
      sentpar::PipelineConfig config = LoadEffectiveConfig(g, mine_input.empty());
      if (!mine_input.empty()) config.mining_set = mine_input;
      if (!mine_output.empty()) {
        auto out = std::filesystem::path(mine_output);
        config.output_dir = out.parent_path().empty() ? "." : out.parent_path().string();
        sentpar::StageMineRules(config, &report);
        std::filesystem::rename(config.OutputPath("rules.tsv"), out);
      } else {
        sentpar::StageMineRules(config, &report);
      }
      std::cout << "rules\t" << report.mined_rules << "\n";
    } else if (*classify) {
      stage([&](const auto &c) { sentpar::StageClassify(c, &report); });
    } else if (*tag) {
      stage([&](const auto &c) { sentpar::StageTag(c, &report); });
    } else if (*filter) {
      stage([&](const auto &c) { sentpar::StageFilter(c, &report); });
    } else if (*split) {
      stage([&](const auto &c) { sentpar::StageSplit(c, &report); });
    } else if (*stats) {
      std::cout << sentpar::CorpusStats(stats_path, stats_classes).ToText();
    } else if (*eval_bleu) {
      auto pairs = sentpar::ReadEvalPairs(hyp_path, ref_path);
      sentpar::BleuOptions options;
      options.max_n = max_n;
      options.smooth = smooth;
      sentpar::BleuResult r = sentpar::Bleu(pairs, options);
      nlohmann::ordered_json j;
      j["bleu"] = sentpar::ToDisplayScore(r.score);
      j["n"] = pairs.size();
      j["brevity_penalty"] = r.brevity_penalty;
      j["precisions"] = r.precisions;
      j["zero_precision"] = r.zero_precision;
      if (!ratings_path.empty()) {
        auto ratings = sentpar::ParseRatings(sentpar::ReadFile(ratings_path), ratings_path);
        sentpar::RatingSummary s = sentpar::Summarize(ratings);
        j["ratings"] = {{"count", s.count},
                        {"adequacy", s.mean_adequacy},
                        {"fluency", s.mean_fluency}};
      }
      if (r.zero_precision)
        std::cerr << "warning: a pooled n-gram precision is zero; BLEU is 0\n";
      std::cout << j.dump() << "\n";
    } else if (*eval_ter) {
      auto pairs = sentpar::ReadEvalPairs(hyp_path, ref_path);
      sentpar::TerResult r = sentpar::CorpusTer(pairs);
      nlohmann::ordered_json j;
      j["ter"] = sentpar::ToDisplayScore(r.score());
      j["n"] = pairs.size();
      j["shifts"] = r.shifts;
      j["edits"] = r.edits;
      j["reference_length"] = r.reference_length;
      std::cout << j.dump() << "\n";
    }
  } catch (const sentpar::ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipelineError;
  }
  return 0;
}
