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

#include "sentpar/corpus.h"

#include <charconv>

#include "sentpar/errors.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace {

std::size_t ParseId(std::string_view field, const std::string &source,
                    std::size_t line_no) {
  std::size_t id = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), id);
  if (ec != std::errc() || p != field.data() + field.size() || id == 0)
    throw LineError(source, line_no, "bad record id '" + std::string(field) + "'");
  return id;
}

void RejectBackslash(std::string_view text, const std::string &source,
                     std::size_t line_no) {
  if (text.find('\\') != std::string_view::npos)
    throw LineError(source, line_no,
                    "sentence contains '\\', which is reserved for sentiment tags");
}

}  // namespace

std::vector<CorpusRecord> ParseRawCorpus(std::string_view text,
                                         const std::string &source_name) {
  std::vector<CorpusRecord> records;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() > 2)
      throw LineError(source_name, line_no, "expected english[<TAB>bengali]");
    if (Trim(fields[0]).empty())
      throw LineError(source_name, line_no, "empty English sentence");
    CorpusRecord rec;
    rec.record_id = line_no;
    RejectBackslash(fields[0], source_name, line_no);
    rec.source_text = std::string(fields[0]);
    if (fields.size() == 2 && !Trim(fields[1]).empty()) {
      RejectBackslash(fields[1], source_name, line_no);
      rec.target_text = std::string(fields[1]);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string FormatCorpusTable(const std::vector<CorpusRecord> &records) {
  std::string out;
  for (const CorpusRecord &r : records) {
    out += std::to_string(r.record_id);
    out += '\t';
    out += r.source_text;
    out += '\t';
    if (r.target_text) out += *r.target_text;
    out += '\n';
  }
  return out;
}

std::vector<CorpusRecord> ParseCorpusTable(std::string_view text,
                                           const std::string &source_name) {
  std::vector<CorpusRecord> records;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 3)
      throw LineError(source_name, line_no, "expected id<TAB>english<TAB>bengali");
    CorpusRecord rec;
    rec.record_id = ParseId(fields[0], source_name, line_no);
    RejectBackslash(fields[1], source_name, line_no);
    RejectBackslash(fields[2], source_name, line_no);
    rec.source_text = std::string(fields[1]);
    if (!fields[2].empty()) rec.target_text = std::string(fields[2]);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string FormatClasses(const std::vector<CorpusRecord> &records) {
  std::string out;
  for (const CorpusRecord &r : records) {
    if (!r.complexity) continue;
    out += std::to_string(r.record_id);
    out += '\t';
    out += ToString(*r.complexity);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::size_t, ComplexityClass>> ParseClasses(
    std::string_view text, const std::string &source_name) {
  std::vector<std::pair<std::size_t, ComplexityClass>> out;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 2)
      throw LineError(source_name, line_no, "expected record_id<TAB>class");
    std::optional<ComplexityClass> c = ParseComplexityClass(fields[1]);
    if (!c)
      throw FormatError(source_name, line_no,
                        "unknown class '" + std::string(fields[1]) + "'");
    out.emplace_back(ParseId(fields[0], source_name, line_no), *c);
  }
  return out;
}

std::string FormatPairs(const PairTable &table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += table.source[i];
    out += '\t';
    out += table.target[i];
    out += '\n';
  }
  return out;
}

std::string FormatIds(const PairTable &table) {
  std::string out;
  for (std::size_t id : table.ids) out += std::to_string(id) + "\n";
  return out;
}

PairTable ParsePairTable(std::string_view text, std::string_view ids_text,
                         const std::string &source_name) {
  PairTable table;
  std::vector<std::string_view> lines = SplitLines(text);
  std::vector<std::string_view> id_lines = SplitLines(ids_text);
  const bool has_ids = !ids_text.empty();
  if (has_ids && id_lines.size() != lines.size())
    throw AlignmentError(source_name + ": id sidecar has " +
                         std::to_string(id_lines.size()) + " lines for " +
                         std::to_string(lines.size()) + " records");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = Split(lines[i], '\t');
    if (fields.size() != 2)
      throw LineError(source_name, i + 1,
                      "expected 2 tab-separated fields, found " +
                          std::to_string(fields.size()));
    std::size_t id = has_ids ? ParseId(id_lines[i], source_name + ".ids", i + 1)
                             : i + 1;
    table.Add(id, std::string(fields[0]), std::string(fields[1]));
  }
  return table;
}

PairTable ReadPairTable(const std::string &path) {
  std::string ids_path = path + ".ids";
  std::string ids = FileExists(ids_path) ? ReadFile(ids_path) : std::string();
  return ParsePairTable(ReadFile(path), ids, path);
}

void WritePairTable(const std::string &path, const PairTable &table) {
  WriteFile(path, FormatPairs(table));
  WriteFile(path + ".ids", FormatIds(table));
}

}  // namespace sentpar
