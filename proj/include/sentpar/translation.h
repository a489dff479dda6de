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

#ifndef SENTPAR_TRANSLATION_H_
#define SENTPAR_TRANSLATION_H_

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentpar/corpus.h"
#include "sentpar/errors.h"

namespace sentpar {

// Raised by a provider for a single failed request.
class TranslationError : public Error {
 public:
  using Error::Error;
};

// English -> Bengali sentence translation backend.
class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;
  virtual std::string Translate(std::string_view source) = 0;
};

// Offline provider backed by an exact-match sentence table. Unknown
// sentences raise TranslationError.
class DictionaryProvider : public TranslationProvider {
 public:
  explicit DictionaryProvider(std::map<std::string, std::string, std::less<>> table)
      : table_(std::move(table)) {}

  // "source<TAB>target" lines.
  static DictionaryProvider FromFile(const std::string &path);

  std::string Translate(std::string_view source) override;

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

// Generic HTTP GET provider. `url_template` contains "{text}", which is
// replaced by the percent-encoded source sentence; the response body is the
// translation. A non-empty token is sent as "Authorization: Bearer <token>".
class HttpProvider : public TranslationProvider {
 public:
  HttpProvider(std::string url_template, std::string auth_token,
               std::chrono::milliseconds timeout = std::chrono::seconds(30));

  std::string Translate(std::string_view source) override;

 private:
  std::string origin_;       // scheme://host[:port]
  std::string path_template_;
  std::string auth_token_;
  std::chrono::milliseconds timeout_;
};

std::string PercentEncode(std::string_view text);

// On-disk memo of provider results keyed by source sentence, stored as
// "source<TAB>target" lines. Reads may run concurrently; writes are
// serialized and appended immediately so interrupted runs keep their work.
class TranslationCache {
 public:
  // Empty path gives an in-memory cache.
  explicit TranslationCache(std::string path = {});

  std::optional<std::string> Get(std::string_view source) const;
  void Put(const std::string &source, const std::string &target);
  std::size_t size() const;

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, std::string, std::less<>> entries_;
};

struct TranslateOptions {
  int max_attempts = 3;
  std::chrono::milliseconds min_interval{0};  // between provider calls
};

struct TranslateOutcome {
  std::vector<CorpusRecord> records;
  std::size_t pretranslated = 0;
  std::size_t from_cache = 0;
  std::size_t translated = 0;
  std::size_t failed = 0;
};

// Fills missing targets. Records that already carry a target pass through
// untouched; a record whose provider calls all fail is flagged failed.
TranslateOutcome TranslateMissing(std::vector<CorpusRecord> records,
                                  TranslationProvider &provider,
                                  TranslationCache &cache,
                                  const TranslateOptions &options = {});

}  // namespace sentpar

#endif  // SENTPAR_TRANSLATION_H_
