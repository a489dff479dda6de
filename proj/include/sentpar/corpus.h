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

#ifndef SENTPAR_CORPUS_H_
#define SENTPAR_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentpar/clause_rules.h"

namespace sentpar {

// One aligned English/Bengali record. record_id is the 1-based line number
// of the raw corpus and stays fixed through every stage.
struct CorpusRecord {
  std::size_t record_id = 0;
  std::string source_text;
  std::optional<std::string> target_text;
  std::optional<ComplexityClass> complexity;
  bool failed = false;
  std::string failure;

  friend bool operator==(const CorpusRecord &, const CorpusRecord &) = default;
};

// Raw corpus: "english" or "english<TAB>bengali" per line. Blank lines are
// skipped but still consume a record id. Sentences containing a backslash
// are rejected because it is the inline tag separator.
std::vector<CorpusRecord> ParseRawCorpus(std::string_view text,
                                         const std::string &source_name);

// Working corpus: "record_id<TAB>english<TAB>bengali" with an empty third
// field for untranslated records.
std::string FormatCorpusTable(const std::vector<CorpusRecord> &records);
std::vector<CorpusRecord> ParseCorpusTable(std::string_view text,
                                           const std::string &source_name);

// "record_id<TAB>class" lines.
std::string FormatClasses(const std::vector<CorpusRecord> &records);
std::vector<std::pair<std::size_t, ComplexityClass>> ParseClasses(
    std::string_view text, const std::string &source_name);

// Two-column corpora ("en<TAB>bn") with a sidecar of record ids, one per line.
struct PairTable {
  std::vector<std::size_t> ids;
  std::vector<std::string> source;
  std::vector<std::string> target;

  std::size_t size() const { return ids.size(); }
  void Add(std::size_t id, std::string src, std::string tgt) {
    ids.push_back(id);
    source.push_back(std::move(src));
    target.push_back(std::move(tgt));
  }
};

std::string FormatPairs(const PairTable &table);
std::string FormatIds(const PairTable &table);

// Reads "<path>" and, when present, "<path>.ids". Without a sidecar the ids
// are line numbers. Lines must have exactly two tab-separated fields.
PairTable ReadPairTable(const std::string &path);
PairTable ParsePairTable(std::string_view text, std::string_view ids_text,
                         const std::string &source_name);
void WritePairTable(const std::string &path, const PairTable &table);

}  // namespace sentpar

#endif  // SENTPAR_CORPUS_H_
