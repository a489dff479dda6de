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

#include <atomic>
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <gtest/gtest.h>

#include "sentpar/text_io.h"

namespace sentpar {
namespace {

class CountingProvider : public TranslationProvider {
 public:
  explicit CountingProvider(int fail_first = 0, bool always_fail = false)
      : fail_first_(fail_first), always_fail_(always_fail) {}

  std::string Translate(std::string_view source) override {
    ++calls;
    if (always_fail_ || calls <= fail_first_) throw TranslationError("unavailable");
    return "bn:" + std::string(source);
  }

  int calls = 0;

 private:
  int fail_first_;
  bool always_fail_;
};

std::vector<CorpusRecord> Records() {
  std::vector<CorpusRecord> r(3);
  r[0] = {1, "one", std::string("এক")};
  r[1] = {2, "two", std::nullopt};
  r[2] = {3, "three", std::nullopt};
  return r;
}

TEST(TranslateMissingTest, PassThroughWhenComplete) {
  std::vector<CorpusRecord> recs(1);
  recs[0] = {1, "one", std::string("এক")};
  CountingProvider provider;
  TranslationCache cache;
  TranslateOutcome out = TranslateMissing(recs, provider, cache);
  EXPECT_EQ(out.records, recs);
  EXPECT_EQ(out.pretranslated, 1u);
  EXPECT_EQ(provider.calls, 0);
}

TEST(TranslateMissingTest, FillsMissingTargets) {
  CountingProvider provider;
  TranslationCache cache;
  TranslateOutcome out = TranslateMissing(Records(), provider, cache);
  EXPECT_EQ(out.translated, 2u);
  EXPECT_EQ(out.pretranslated, 1u);
  EXPECT_EQ(*out.records[1].target_text, "bn:two");
  EXPECT_EQ(cache.size(), 2u);
}

TEST(TranslateMissingTest, RetriesThenSucceeds) {
  CountingProvider provider(2);
  TranslationCache cache;
  TranslateOutcome out = TranslateMissing(Records(), provider, cache);
  EXPECT_EQ(out.failed, 0u);
  EXPECT_EQ(provider.calls, 4);
}

TEST(TranslateMissingTest, AlwaysFailingProviderFlagsRecords) {
  std::vector<CorpusRecord> recs(3);
  for (std::size_t i = 0; i < 3; ++i) recs[i] = {i + 1, "s" + std::to_string(i), std::nullopt};
  CountingProvider provider(0, true);
  TranslationCache cache;
  TranslateOutcome out = TranslateMissing(recs, provider, cache, {.max_attempts = 3});
  EXPECT_EQ(out.failed, 3u);
  EXPECT_EQ(provider.calls, 9);
  for (const CorpusRecord &r : out.records) {
    EXPECT_TRUE(r.failed);
    EXPECT_FALSE(r.target_text.has_value());
    EXPECT_EQ(r.failure, "unavailable");
  }
}

TEST(TranslateMissingTest, RejectsUnstorableOutput) {
  class TabProvider : public TranslationProvider {
   public:
    std::string Translate(std::string_view) override { return "a\tb"; }
  } provider;
  TranslationCache cache;
  TranslateOutcome out = TranslateMissing(Records(), provider, cache, {.max_attempts = 1});
  EXPECT_EQ(out.failed, 2u);
  EXPECT_EQ(cache.size(), 0u);
}

TEST(TranslateMissingTest, RespectsMinimumInterval) {
  CountingProvider provider;
  TranslationCache cache;
  auto start = std::chrono::steady_clock::now();
  TranslateMissing(Records(), provider, cache,
                   {.min_interval = std::chrono::milliseconds(50)});
  EXPECT_GE(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(50));
}

TEST(TranslationCacheTest, PersistsAndAvoidsProviderCalls) {
  auto dir = std::filesystem::temp_directory_path() / "sentpar_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string path = (dir / "cache.tsv").string();
  {
    CountingProvider provider;
    TranslationCache cache(path);
    TranslateMissing(Records(), provider, cache);
    EXPECT_EQ(provider.calls, 2);
  }
  CountingProvider provider;
  TranslationCache cache(path);
  EXPECT_EQ(cache.size(), 2u);
  TranslateOutcome out = TranslateMissing(Records(), provider, cache);
  EXPECT_EQ(provider.calls, 0);
  EXPECT_EQ(out.from_cache, 2u);
  EXPECT_EQ(*out.records[2].target_text, "bn:three");
  std::filesystem::remove_all(dir);
}

TEST(DictionaryProviderTest, LooksUpExactSentence) {
  std::map<std::string, std::string, std::less<>> table = {{"hello", "হ্যালো"}};
  DictionaryProvider p(std::move(table));
  EXPECT_EQ(p.Translate("hello"), "হ্যালো");
  EXPECT_THROW(p.Translate("bye"), TranslationError);
}

TEST(PercentEncodeTest, Examples) {
  EXPECT_EQ(PercentEncode("a b"), "a%20b");
  EXPECT_EQ(PercentEncode("x-y_z.~"), "x-y_z.~");
  EXPECT_EQ(PercentEncode("এ"), "%E0%A6%8F");
  EXPECT_EQ(PercentEncode("&="), "%26%3D");
}

TEST(HttpProviderTest, ConfigErrors) {
  EXPECT_THROW(HttpProvider("localhost/{text}", ""), ConfigError);
  EXPECT_THROW(HttpProvider("ftp://host/{text}", ""), ConfigError);
  EXPECT_THROW(HttpProvider("http://host/translate", ""), ConfigError);
}

TEST(HttpProviderTest, TalksToLocalServer) {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get("/translate", [&](const httplib::Request &req, httplib::Response &res) {
    ++hits;
    if (req.get_header_value("Authorization") != "Bearer secret") {
      res.status = 401;
      return;
    }
    std::string q = req.get_param_value("q");
    if (q == "fail") {
      res.status = 503;
      return;
    }
    res.set_content("bn(" + q + ")\n", "text/plain");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  std::string url = "http://127.0.0.1:" + std::to_string(port) + "/translate?q={text}";
  HttpProvider provider(url, "secret", std::chrono::seconds(5));
  EXPECT_EQ(provider.Translate("good day"), "bn(good day)");
  EXPECT_THROW(provider.Translate("fail"), TranslationError);
  HttpProvider unauthorized(url, "wrong", std::chrono::seconds(5));
  EXPECT_THROW(unauthorized.Translate("x"), TranslationError);
  EXPECT_EQ(hits.load(), 3);

  server.stop();
  thread.join();
}

}  // namespace
}  // namespace sentpar
