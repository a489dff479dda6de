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

#include "sentpar/translation.h"

#include <fstream>
#include <thread>

#include "sentpar/text_io.h"

namespace sentpar {

namespace {

void CheckStorable(std::string_view text) {
  if (Trim(text).empty()) throw TranslationError("provider returned empty text");
  for (char c : text)
    if (c == '\t' || c == '\n' || c == '\r' || c == '\\')
      throw TranslationError("provider returned reserved character");
}

}  // namespace

DictionaryProvider DictionaryProvider::FromFile(const std::string &path) {
  std::string text = ReadFile(path);
  std::map<std::string, std::string, std::less<>> table;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 2)
      throw LineError(path, line_no, "expected source<TAB>target");
    table.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  return DictionaryProvider(std::move(table));
}

std::string DictionaryProvider::Translate(std::string_view source) {
  auto it = table_.find(source);
  if (it == table_.end())
    throw TranslationError("no dictionary entry for '" + std::string(source) + "'");
  return it->second;
}

TranslationCache::TranslationCache(std::string path) : path_(std::move(path)) {
  if (path_.empty() || !FileExists(path_)) return;
  std::string text = ReadFile(path_);
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 2)
      throw LineError(path_, line_no, "expected source<TAB>target");
    entries_.insert_or_assign(std::string(fields[0]), std::string(fields[1]));
  }
}

std::optional<std::string> TranslationCache::Get(std::string_view source) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(source);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TranslationCache::Put(const std::string &source, const std::string &target) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.insert_or_assign(source, target);
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) throw Error("cannot append to translation cache " + path_);
  out << source << '\t' << target << '\n';
}

std::size_t TranslationCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

TranslateOutcome TranslateMissing(std::vector<CorpusRecord> records,
                                  TranslationProvider &provider,
                                  TranslationCache &cache,
                                  const TranslateOptions &options) {
  TranslateOutcome outcome;
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> last_call;
  for (CorpusRecord &rec : records) {
    if (rec.target_text) {
      ++outcome.pretranslated;
      continue;
    }
    if (std::optional<std::string> hit = cache.Get(rec.source_text)) {
      rec.target_text = std::move(*hit);
      ++outcome.from_cache;
      continue;
    }
    std::string last_error;
    for (int attempt = 0; attempt < std::max(1, options.max_attempts); ++attempt) {
      if (last_call && options.min_interval.count() > 0)
        std::this_thread::sleep_until(*last_call + options.min_interval);
      last_call = Clock::now();
      try {
        std::string target = provider.Translate(rec.source_text);
        CheckStorable(target);
        cache.Put(rec.source_text, target);
        rec.target_text = std::move(target);
        break;
      } catch (const std::exception &e) {
        last_error = e.what();
      }
    }
    if (rec.target_text) {
      ++outcome.translated;
    } else {
      rec.failed = true;
      rec.failure = last_error;
      ++outcome.failed;
    }
  }
  outcome.records = std::move(records);
  return outcome;
}

}  // namespace sentpar
