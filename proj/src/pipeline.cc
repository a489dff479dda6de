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

#include "sentpar/pipeline.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <memory>
#include <random>
#include <set>

#include <json.hpp>

#include "sentpar/corpus.h"
#include "sentpar/errors.h"
#include "sentpar/mt_metrics.h"
#include "sentpar/parallel.h"
#include "sentpar/parse_tree.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kCorpusFile = "corpus.tsv";
constexpr std::string_view kFailedFile = "failed.tsv";
constexpr std::string_view kRulesFile = "rules.tsv";
constexpr std::string_view kClassesFile = "classes.tsv";
constexpr std::string_view kTaggedFile = "tagged.tsv";
constexpr std::string_view kKeptFile = "kept.tsv";
constexpr std::string_view kDropLogFile = "drop_log.tsv";
constexpr std::string_view kFilterStatsFile = "filter_stats.txt";
constexpr std::string_view kHeldoutFile = "heldout.tsv";
constexpr std::string_view kEvalFile = "eval.json";
constexpr std::string_view kReportFile = "report.txt";

constexpr ComplexityClass kAllClasses[] = {
    ComplexityClass::kSimple, ComplexityClass::kComplex,
    ComplexityClass::kCompound, ComplexityClass::kUntagged};

std::string Resolve(const std::string &base_dir, std::string_view value) {
  fs::path p{std::string(value)};
  if (p.is_absolute() || base_dir.empty()) return p.lexically_normal().string();
  return (fs::path(base_dir) / p).lexically_normal().string();
}

bool ParseBool(std::string_view v, const std::string &key) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError("bad boolean for " + key + ": " + std::string(v));
}

template <typename T>
T ParseNumber(std::string_view v, const std::string &key) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("bad number for " + key + ": " + std::string(v));
  return out;
}

// "labeled:path, scored:path"
std::vector<LexiconSource> ParseLexiconList(std::string_view v,
                                            const std::string &base_dir,
                                            const std::string &key) {
  std::vector<LexiconSource> out;
  for (std::string_view item : Split(v, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw ConfigError(key + " entries must be labeled:<path> or scored:<path>");
    std::string_view kind = item.substr(0, colon);
    LexiconSource src;
    if (kind == "labeled")
      src.format = LexiconFormat::kLabeled;
    else if (kind == "scored")
      src.format = LexiconFormat::kScored;
    else
      throw ConfigError("unknown lexicon format '" + std::string(kind) + "' in " + key);
    src.path = Resolve(base_dir, Trim(item.substr(colon + 1)));
    out.push_back(std::move(src));
  }
  return out;
}

void RequireArtifact(const std::string &path, std::string_view what) {
  if (!FileExists(path))
    throw ConfigError("missing " + std::string(what) + ": " + path);
}

void EnsureOutputDir(const PipelineConfig &config) {
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + config.output_dir);
}

std::vector<CorpusRecord> ReadWorkingCorpus(const PipelineConfig &config) {
  std::string path = config.OutputPath(kCorpusFile);
  RequireArtifact(path, "working corpus (run ingest first)");
  return ParseCorpusTable(ReadFile(path), path);
}

std::map<std::size_t, ComplexityClass> ReadClassMap(const std::string &path) {
  std::map<std::size_t, ComplexityClass> out;
  for (auto [id, c] : ParseClasses(ReadFile(path), path)) out[id] = c;
  return out;
}

SentimentLexicon LoadMerged(const std::vector<LexiconSource> &sources,
                            Language language) {
  std::vector<SentimentLexicon> parts;
  for (const LexiconSource &src : sources)
    parts.push_back(LoadLexiconFile(src.path, src.format, language));
  if (parts.empty()) return SentimentLexicon(language);
  return Merge(parts);
}

std::unique_ptr<TranslationProvider> MakeProvider(const PipelineConfig &config) {
  if (config.provider == "mock")
    return std::make_unique<DictionaryProvider>(
        DictionaryProvider::FromFile(config.provider_dictionary));
  if (config.provider == "http")
    return std::make_unique<HttpProvider>(config.provider_url, config.provider_token);
  return nullptr;
}

bool IsOther(ComplexityClass c) {
  return c == ComplexityClass::kComplex || c == ComplexityClass::kCompound;
}

// Deterministic sample of k of n indices: a partial Fisher-Yates shuffle
// driven by raw mt19937_64 output, whose sequence the standard fixes.
std::set<std::size_t> SampleIndices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(idx[i], idx[j]);
  }
  return std::set<std::size_t>(idx.begin(), idx.begin() + static_cast<long>(k));
}

}  // namespace

double ToDisplayScore(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

std::string PipelineConfig::OutputPath(std::string_view name) const {
  return (fs::path(output_dir) / std::string(name)).string();
}

PipelineConfig ParseConfig(std::string_view text, const std::string &base_dir,
                           const std::string &source_name) {
  PipelineConfig c;
  c.output_dir = Resolve(base_dir, c.output_dir);
  bool cache_set = false;
  std::size_t line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(source_name + ":" + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view v = Trim(line.substr(eq + 1));
    auto path = [&] { return Resolve(base_dir, v); };
    if (key == "corpus") c.corpus = path();
    else if (key == "parses") c.parses = path();
    else if (key == "rules") c.rules = path();
    else if (key == "mining_set") c.mining_set = path();
    else if (key == "output_dir") c.output_dir = path();
    else if (key == "lexicon.en") c.lexicons_en = ParseLexiconList(v, base_dir, key);
    else if (key == "lexicon.bn") c.lexicons_bn = ParseLexiconList(v, base_dir, key);
    else if (key == "provider") c.provider = std::string(v);
    else if (key == "provider.dictionary") c.provider_dictionary = path();
    else if (key == "provider.url") c.provider_url = std::string(v);
    else if (key == "provider.token") c.provider_token = std::string(v);
    else if (key == "provider.cache") { c.provider_cache = path(); cache_set = true; }
    else if (key == "provider.max_attempts") c.provider_max_attempts = ParseNumber<int>(v, key);
    else if (key == "provider.min_interval_ms") c.provider_min_interval_ms = ParseNumber<int>(v, key);
    else if (key == "stage.translate") c.stage_translate = ParseBool(v, key);
    else if (key == "stage.classify") c.stage_classify = ParseBool(v, key);
    else if (key == "stage.sentiment") c.stage_sentiment = ParseBool(v, key);
    else if (key == "stage.evaluate") c.stage_evaluate = ParseBool(v, key);
    else if (key == "eval.hypothesis") c.eval_hypothesis = path();
    else if (key == "eval.reference") c.eval_reference = path();
    else if (key == "heldout") c.heldout = ParseNumber<std::size_t>(v, key);
    else if (key == "seed") c.seed = ParseNumber<std::uint64_t>(v, key);
    else if (key == "jobs") c.jobs = ParseNumber<unsigned>(v, key);
    else
      throw ConfigError(source_name + ":" + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
  }
  if (c.provider != "none" && c.provider != "mock" && c.provider != "http")
    throw ConfigError("provider must be none, mock or http");
  if (c.provider_max_attempts < 1 || c.provider_min_interval_ms < 0)
    throw ConfigError("provider retry settings must be positive");
  if (c.jobs == 0) c.jobs = 1;
  if (!cache_set) c.provider_cache = c.OutputPath("translation_cache.tsv");
  return c;
}

PipelineConfig LoadConfig(const std::string &path) {
  if (!FileExists(path)) throw ConfigError("config file not found: " + path);
  std::string base = fs::path(path).parent_path().string();
  return ParseConfig(ReadFile(path), base, path);
}

void ValidateConfig(const PipelineConfig &config) {
  if (config.corpus.empty()) throw ConfigError("config lacks 'corpus'");
  RequireArtifact(config.corpus, "corpus");
  if (config.stage_translate && config.provider == "mock")
    RequireArtifact(config.provider_dictionary, "provider.dictionary");
  if (config.stage_translate && config.provider == "http" && config.provider_url.empty())
    throw ConfigError("provider = http needs provider.url");
  if (config.stage_classify) {
    if (config.parses.empty()) throw ConfigError("classification needs 'parses'");
    RequireArtifact(config.parses, "parses");
    if (config.rules.empty() && config.mining_set.empty())
      throw ConfigError("classification needs 'rules' or 'mining_set'");
    if (!config.rules.empty()) RequireArtifact(config.rules, "rules");
    if (!config.mining_set.empty()) RequireArtifact(config.mining_set, "mining_set");
  }
  if (config.stage_sentiment) {
    for (const auto *list : {&config.lexicons_en, &config.lexicons_bn})
      for (const LexiconSource &src : *list) RequireArtifact(src.path, "lexicon");
  }
  if (config.stage_evaluate) {
    if (config.eval_hypothesis.empty() || config.eval_reference.empty())
      throw ConfigError("evaluation needs eval.hypothesis and eval.reference");
    RequireArtifact(config.eval_hypothesis, "eval.hypothesis");
    RequireArtifact(config.eval_reference, "eval.reference");
  }
}

void StageIngest(const PipelineConfig &config, RunReport *report) {
  RequireArtifact(config.corpus, "corpus");
  EnsureOutputDir(config);
  std::vector<CorpusRecord> records =
      ParseRawCorpus(ReadFile(config.corpus), config.corpus);
  report->records_in = records.size();
  WriteFile(config.OutputPath(kCorpusFile), FormatCorpusTable(records));
}

void StageTranslate(const PipelineConfig &config, RunReport *report,
                    TranslationProvider *provider) {
  std::vector<CorpusRecord> records = ReadWorkingCorpus(config);
  const bool needed = std::any_of(records.begin(), records.end(),
                                  [](const CorpusRecord &r) { return !r.target_text; });
  std::unique_ptr<TranslationProvider> owned;
  if (needed && provider == nullptr) {
    owned = MakeProvider(config);
    provider = owned.get();
    if (provider == nullptr)
      throw ConfigError("records lack translations but no provider is configured");
  }

  TranslateOutcome outcome;
  if (needed) {
    TranslationCache cache(config.provider_cache);
    TranslateOptions options;
    options.max_attempts = config.provider_max_attempts;
    options.min_interval = std::chrono::milliseconds(config.provider_min_interval_ms);
    outcome = TranslateMissing(std::move(records), *provider, cache, options);
  } else {
    outcome.records = std::move(records);
    outcome.pretranslated = outcome.records.size();
  }
  report->pretranslated = outcome.pretranslated;
  report->translated = outcome.translated;
  report->from_cache = outcome.from_cache;
  report->failed = outcome.failed;

  std::vector<CorpusRecord> ok;
  std::string failed_log;
  for (CorpusRecord &r : outcome.records) {
    if (r.failed)
      failed_log += std::to_string(r.record_id) + "\t" + r.failure + "\n";
    else
      ok.push_back(std::move(r));
  }
  if (!outcome.records.empty() && ok.empty())
    throw Error("translation failed for every record");
  WriteFile(config.OutputPath(kFailedFile), failed_log);
  WriteFile(config.OutputPath(kCorpusFile), FormatCorpusTable(ok));
}

void StageMineRules(const PipelineConfig &config, RunReport *report) {
  RequireArtifact(config.mining_set, "mining_set");
  EnsureOutputDir(config);
  ParseFile trees = ReadParseFile(config.mining_set, config.jobs);
  std::vector<PhraseSequence> sequences;
  for (const auto &tree : trees)
    if (tree) sequences.push_back(PhraseSequenceOf(*tree));
  RuleSet rules = MineRules(sequences);
  report->mined_rules = rules.rules.size();
  WriteFile(config.OutputPath(kRulesFile), FormatRules(rules));
}

void StageClassify(const PipelineConfig &config, RunReport *report) {
  std::vector<CorpusRecord> records = ReadWorkingCorpus(config);
  RequireArtifact(config.parses, "parses");
  std::string rules_path =
      config.rules.empty() ? config.OutputPath(kRulesFile) : config.rules;
  RequireArtifact(rules_path, "rules (run mine-rules or set 'rules')");
  RuleSet rules = ParseRules(ReadFile(rules_path), rules_path);
  ParseFile trees = ReadParseFile(config.parses, config.jobs);

  std::vector<char> unparsed(records.size(), 0);
  ParallelFor(records.size(), config.jobs, [&](std::size_t i) {
    CorpusRecord &r = records[i];
    std::size_t line = r.record_id - 1;
    if (line < trees.size() && trees[line]) {
      r.complexity = Classify(*trees[line], rules);
    } else {
      r.complexity = ComplexityClass::kUntagged;
      unparsed[i] = 1;
    }
  });
  report->classified = true;
  report->classes.clear();
  for (std::size_t i = 0; i < records.size(); ++i) {
    ++report->classes[*records[i].complexity];
    report->unparsed += unparsed[i];
  }
  WriteFile(config.OutputPath(kClassesFile), FormatClasses(records));
}

void StageTag(const PipelineConfig &config, RunReport *report) {
  std::vector<CorpusRecord> records = ReadWorkingCorpus(config);
  SentimentLexicon en = LoadMerged(config.lexicons_en, Language::kEnglish);
  SentimentLexicon bn = LoadMerged(config.lexicons_bn, Language::kBengali);
  std::erase_if(records, [](const CorpusRecord &r) { return !r.target_text; });

  std::vector<std::pair<std::string, std::string>> tagged(records.size());
  ParallelFor(records.size(), config.jobs, [&](std::size_t i) {
    tagged[i] = {TagSentence(records[i].source_text, en).Serialize(),
                 TagSentence(*records[i].target_text, bn).Serialize()};
  });
  PairTable table;
  for (std::size_t i = 0; i < records.size(); ++i)
    table.Add(records[i].record_id, std::move(tagged[i].first),
              std::move(tagged[i].second));
  report->sentiment = true;
  report->tagged_pairs = table.size();
  WritePairTable(config.OutputPath(kTaggedFile), table);
}

void StageFilter(const PipelineConfig &config, RunReport *report) {
  std::string tagged_path = config.OutputPath(kTaggedFile);
  RequireArtifact(tagged_path, "tagged corpus (run tag first)");
  PairTable tagged = ReadPairTable(tagged_path);
  std::map<std::size_t, ComplexityClass> classes;
  if (FileExists(config.OutputPath(kClassesFile)))
    classes = ReadClassMap(config.OutputPath(kClassesFile));

  std::vector<ParallelPair> pairs(tagged.size());
  ParallelFor(tagged.size(), config.jobs, [&](std::size_t i) {
    pairs[i].record_id = tagged.ids[i];
    pairs[i].source = ParseTaggedSentence(tagged.source[i]);
    pairs[i].target = ParseTaggedSentence(tagged.target[i]);
    auto it = classes.find(tagged.ids[i]);
    if (it != classes.end()) pairs[i].complexity = it->second;
  });
  FilterResult result = FilterCorpus(std::move(pairs));

  PairTable kept;
  for (const ParallelPair &p : result.kept)
    kept.Add(p.record_id, p.source.Serialize(), p.target.Serialize());
  report->sentiment = true;
  report->filter = result.stats;
  WritePairTable(config.OutputPath(kKeptFile), kept);
  WriteFile(config.OutputPath(kDropLogFile), FormatDropLog(result.drop_log));
  WriteFile(config.OutputPath(kFilterStatsFile), result.stats.ToReport());
}

void StageSplit(const PipelineConfig &config, RunReport *report) {
  std::vector<CorpusRecord> records = ReadWorkingCorpus(config);
  std::erase_if(records, [](const CorpusRecord &r) { return !r.target_text; });
  std::map<std::size_t, ComplexityClass> classes;
  if (FileExists(config.OutputPath(kClassesFile)))
    classes = ReadClassMap(config.OutputPath(kClassesFile));

  std::set<std::size_t> heldout_ids;
  PairTable heldout;
  if (config.heldout > 0) {
    for (std::size_t i : SampleIndices(records.size(), config.heldout, config.seed)) {
      heldout_ids.insert(records[i].record_id);
      heldout.Add(records[i].record_id, records[i].source_text, *records[i].target_text);
    }
    WritePairTable(config.OutputPath(kHeldoutFile), heldout);
  }
  report->heldout = heldout.size();

  auto class_of = [&classes](std::size_t id) -> std::optional<ComplexityClass> {
    auto it = classes.find(id);
    if (it == classes.end()) return std::nullopt;
    return it->second;
  };
  auto emit = [&](const std::string &suffix, const PairTable &all) {
    PairTable simple, others;
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::optional<ComplexityClass> c = class_of(all.ids[i]);
      if (!c) continue;
      if (*c == ComplexityClass::kSimple)
        simple.Add(all.ids[i], all.source[i], all.target[i]);
      else if (IsOther(*c))
        others.Add(all.ids[i], all.source[i], all.target[i]);
    }
    for (const auto &[name, table] :
         {std::pair<std::string, const PairTable *>{"general" + suffix, &all},
          {"simple" + suffix, &simple},
          {"others" + suffix, &others}}) {
      WritePairTable(config.OutputPath(name + ".tsv"), *table);
      report->datasets[name] = table->size();
    }
  };

  PairTable general;
  for (const CorpusRecord &r : records)
    if (!heldout_ids.contains(r.record_id))
      general.Add(r.record_id, r.source_text, *r.target_text);
  emit("", general);

  if (config.stage_sentiment) {
    std::string kept_path = config.OutputPath(kKeptFile);
    RequireArtifact(kept_path, "filtered corpus (run filter first)");
    PairTable kept = ReadPairTable(kept_path);
    PairTable tagged_general;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (!heldout_ids.contains(kept.ids[i]))
        tagged_general.Add(kept.ids[i], kept.source[i], kept.target[i]);
    emit(".sentiment", tagged_general);
  }
}

void StageEvaluate(const PipelineConfig &config, RunReport *report) {
  RequireArtifact(config.eval_hypothesis, "eval.hypothesis");
  RequireArtifact(config.eval_reference, "eval.reference");
  std::vector<EvalPair> pairs =
      ReadEvalPairs(config.eval_hypothesis, config.eval_reference);
  report->bleu = ToDisplayScore(Bleu(pairs).score);
  report->ter = ToDisplayScore(CorpusTer(pairs).score());
  report->eval_pairs = pairs.size();
  nlohmann::ordered_json j;
  j["bleu"] = *report->bleu;
  j["ter"] = *report->ter;
  j["n"] = pairs.size();
  WriteFile(config.OutputPath(kEvalFile), j.dump() + "\n");
}

RunReport RunPipeline(const PipelineConfig &config, TranslationProvider *provider) {
  ValidateConfig(config);
  RunReport report;
  StageIngest(config, &report);
  if (config.stage_translate) {
    StageTranslate(config, &report, provider);
  } else {
    for (const CorpusRecord &r : ReadWorkingCorpus(config))
      r.target_text ? ++report.pretranslated : ++report.untranslated;
  }
  if (config.stage_classify) {
    if (config.rules.empty()) StageMineRules(config, &report);
    StageClassify(config, &report);
  }
  if (config.stage_sentiment) {
    StageTag(config, &report);
    StageFilter(config, &report);
  }
  StageSplit(config, &report);
  if (config.stage_evaluate) StageEvaluate(config, &report);
  WriteFile(config.OutputPath(kReportFile), report.ToText());
  return report;
}

std::string RunReport::ToText() const {
  std::string out;
  auto line = [&out](const std::string &key, std::size_t value) {
    out += key + "\t" + std::to_string(value) + "\n";
  };
  out += "[collection]\n";
  line("records_in", records_in);
  line("pretranslated", pretranslated);
  line("translated", translated);
  line("from_cache", from_cache);
  line("failed", failed);
  line("untranslated", untranslated);
  if (classified) {
    out += "[complexity]\n";
    line("rules_mined", mined_rules);
    for (ComplexityClass c : kAllClasses) {
      auto it = classes.find(c);
      line(std::string(ToString(c)), it == classes.end() ? 0 : it->second);
    }
    line("unparsed", unparsed);
    out += "note\ttarget sentences are assumed to share the source sentence's complexity\n";
  }
  if (sentiment) {
    out += "[sentiment]\n";
    line("tagged_pairs", tagged_pairs);
    out += filter.ToReport();
  }
  out += "[datasets]\n";
  line("heldout", heldout);
  for (const auto &[name, n] : datasets) line(name, n);
  if (bleu) {
    out += "[evaluation]\n";
    line("pairs", eval_pairs);
    out += "bleu\t" + FormatFixed(*bleu, 2) + "\n";
    out += "ter\t" + FormatFixed(*ter, 2) + "\n";
  }
  return out;
}

StatsReport CorpusStats(const std::string &path, const std::string &classes_path) {
  RequireArtifact(path, "corpus");
  PairTable table = ReadPairTable(path);
  StatsReport s;
  s.records = table.size();
  std::map<std::size_t, ComplexityClass> classes;
  if (!classes_path.empty()) {
    RequireArtifact(classes_path, "classes file");
    classes = ReadClassMap(classes_path);
  }
  std::size_t tagged_any = 0, tagged_en = 0, tagged_bn = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    TagSet e = ParseTaggedSentence(table.source[i]).tag_set();
    TagSet b = ParseTaggedSentence(table.target[i]).tag_set();
    tagged_en += !e.empty();
    tagged_bn += !b.empty();
    tagged_any += !(e | b).empty();
    ParallelVerdict v = IsParallel(e, b);
    if (v.parallel)
      ++s.per_rule[static_cast<std::size_t>(*v.rule)];
    else
      ++s.not_parallel;
    if (auto it = classes.find(table.ids[i]); it != classes.end())
      ++s.classes[it->second];
  }
  if (s.records > 0) {
    const double n = static_cast<double>(s.records);
    s.coverage = static_cast<double>(tagged_any) / n;
    s.coverage_en = static_cast<double>(tagged_en) / n;
    s.coverage_bn = static_cast<double>(tagged_bn) / n;
  }
  return s;
}

std::string StatsReport::ToText() const {
  std::string out = "records\t" + std::to_string(records) + "\n";
  for (const auto &[c, n] : classes)
    out += "class." + std::string(ToString(c)) + "\t" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < kNumParallelRules; ++i)
    out += "rule." + ToString(static_cast<ParallelRule>(i)) + "\t" +
           std::to_string(per_rule[i]) + "\n";
  out += "not_parallel\t" + std::to_string(not_parallel) + "\n";
  out += "coverage\t" + FormatFixed(coverage, 4) + "\n";
  out += "coverage.en\t" + FormatFixed(coverage_en, 4) + "\n";
  out += "coverage.bn\t" + FormatFixed(coverage_bn, 4) + "\n";
  return out;
}

}  // namespace sentpar
