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

#include "sentpar/sentiment.h"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "sentpar/errors.h"
#include "sentpar/text_io.h"

namespace sentpar {

namespace {

constexpr std::string_view kDanda = "।";
constexpr std::string_view kDoubleDanda = "॥";
constexpr std::string_view kPosTag = "\\POS";
constexpr std::string_view kNegTag = "\\NEG";

bool IsAsciiPunct(char c) {
  return static_cast<unsigned char>(c) < 0x80 &&
         std::ispunct(static_cast<unsigned char>(c)) && c != '\\';
}

// Byte length of the punctuation mark ending `s`, or 0.
std::size_t TrailingPunctLength(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPunct(s.back())) return 1;
  if (s.ends_with(kDanda) || s.ends_with(kDoubleDanda)) return kDanda.size();
  return 0;
}

std::size_t LeadingPunctLength(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPunct(s.front())) return 1;
  if (s.starts_with(kDanda) || s.starts_with(kDoubleDanda)) return kDanda.size();
  return 0;
}

std::string_view StripPunct(std::string_view s) {
  while (std::size_t n = LeadingPunctLength(s)) s.remove_prefix(n);
  while (std::size_t n = TrailingPunctLength(s)) s.remove_suffix(n);
  return s;
}

// Splits a whitespace-free chunk into word and trailing punctuation run. A
// chunk made only of punctuation stays whole.
std::pair<std::string_view, std::string_view> SplitTrailingPunct(
    std::string_view chunk) {
  std::string_view word = chunk;
  while (std::size_t n = TrailingPunctLength(word)) word.remove_suffix(n);
  if (word.empty()) return {chunk, {}};
  return {word, chunk.substr(word.size())};
}

// Walks `text` as alternating whitespace gaps and chunks.
template <typename Fn>
std::string_view ForEachChunk(std::string_view text, Fn &&fn) {
  std::size_t pos = 0;
  for (;;) {
    std::size_t start = pos;
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (pos == text.size()) return text.substr(start);
    std::size_t word = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    fn(text.substr(start, word - start), text.substr(word, pos - word));
  }
}

void AppendChunk(std::string_view gap, std::string_view chunk, TagSet tags,
                 TaggedSentence *out) {
  auto [word, punct] = SplitTrailingPunct(chunk);
  out->tokens.push_back({std::string(gap), std::string(word), tags});
  if (!punct.empty()) out->tokens.push_back({"", std::string(punct), TagSet()});
}

}  // namespace

std::string TagSet::ToString() const {
  if (has_pos() && has_neg()) return "POS,NEG";
  if (has_pos()) return "POS";
  if (has_neg()) return "NEG";
  return "-";
}

std::string_view ToString(Language lang) {
  return lang == Language::kEnglish ? "en" : "bn";
}

std::string SentimentLexicon::Key(std::string_view term) const {
  std::string key(Trim(term));
  if (language_ == Language::kEnglish)
    for (char &c : key)
      if (static_cast<unsigned char>(c) < 0x80)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return key;
}

void SentimentLexicon::Add(std::string_view term, TagSet tags) {
  if (tags.empty()) return;
  std::string key = Key(term);
  if (key.empty()) return;
  entries_[std::move(key)] |= tags;
}

TagSet SentimentLexicon::Lookup(std::string_view term) const {
  auto it = entries_.find(Key(term));
  return it == entries_.end() ? TagSet() : it->second;
}

SentimentLexicon LoadLexicon(std::string_view text, LexiconFormat format,
                             Language language, const std::string &source_name) {
  SentimentLexicon lexicon(language);
  lexicon.AddSourceName(source_name);
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 2 || Trim(fields[0]).empty())
      throw LineError(source_name, line_no, "expected term<TAB>value");
    std::string_view value = Trim(fields[1]);
    if (format == LexiconFormat::kLabeled) {
      if (value == "POS")
        lexicon.Add(fields[0], TagSet::Pos());
      else if (value == "NEG")
        lexicon.Add(fields[0], TagSet::Neg());
      else
        throw FormatError(source_name, line_no,
                          "unknown polarity label '" + std::string(value) + "'");
    } else {
      double score = 0.0;
      const char *end = value.data() + value.size();
      // from_chars rejects a leading '+'.
      std::string_view digits = value.starts_with('+') ? value.substr(1) : value;
      auto [p, ec] = std::from_chars(digits.data(), end, score);
      if (digits.empty() || ec != std::errc() || p != end)
        throw LineError(source_name, line_no,
                        "bad score '" + std::string(value) + "'");
      if (score > 0)
        lexicon.Add(fields[0], TagSet::Pos());
      else if (score < 0)
        lexicon.Add(fields[0], TagSet::Neg());
    }
  }
  return lexicon;
}

SentimentLexicon LoadLexiconFile(const std::string &path, LexiconFormat format,
                                 Language language) {
  return LoadLexicon(ReadFile(path), format, language, path);
}

SentimentLexicon Merge(std::span<const SentimentLexicon> lexicons) {
  if (lexicons.empty()) return SentimentLexicon();
  SentimentLexicon merged(lexicons.front().language());
  for (const SentimentLexicon &lex : lexicons) {
    if (lex.language() != merged.language())
      throw LanguageMismatchError("cannot merge " +
                                  std::string(ToString(lex.language())) +
                                  " lexicon into " +
                                  std::string(ToString(merged.language())));
    for (const auto &[term, tags] : lex.entries()) merged.Add(term, tags);
    for (const std::string &name : lex.source_names()) merged.AddSourceName(name);
  }
  return merged;
}

std::string TaggedSentence::Serialize() const {
  std::string out;
  for (const SentimentToken &t : tokens) {
    out += t.gap;
    out += t.surface;
    if (t.tags.has_pos()) out += kPosTag;
    if (t.tags.has_neg()) out += kNegTag;
  }
  out += trailing;
  return out;
}

std::string TaggedSentence::Raw() const {
  std::string out;
  for (const SentimentToken &t : tokens) {
    out += t.gap;
    out += t.surface;
  }
  out += trailing;
  return out;
}

TagSet TaggedSentence::tag_set() const {
  TagSet all;
  for (const SentimentToken &t : tokens) all |= t.tags;
  return all;
}

TaggedSentence TagSentence(std::string_view sentence,
                           const SentimentLexicon &lexicon) {
  if (sentence.find('\\') != std::string_view::npos)
    throw std::invalid_argument("sentence contains a backslash: " +
                                std::string(sentence));
  TaggedSentence out;
  out.trailing = ForEachChunk(sentence, [&](std::string_view gap,
                                            std::string_view chunk) {
    std::string_view key = StripPunct(chunk);
    TagSet tags = key.empty() ? TagSet() : lexicon.Lookup(key);
    AppendChunk(gap, chunk, tags, &out);
  });
  return out;
}

TaggedSentence ParseTaggedSentence(std::string_view text) {
  TaggedSentence out;
  out.trailing = ForEachChunk(text, [&](std::string_view gap,
                                        std::string_view chunk) {
    std::size_t slash = chunk.find('\\');
    if (slash == std::string_view::npos) {
      AppendChunk(gap, chunk, TagSet(), &out);
      return;
    }
    std::string_view word = chunk.substr(0, slash);
    std::string_view rest = chunk.substr(slash);
    TagSet tags;
    while (!rest.empty() && rest.front() == '\\') {
      if (rest.starts_with(kPosTag)) {
        tags |= TagSet::Pos();
        rest.remove_prefix(kPosTag.size());
      } else if (rest.starts_with(kNegTag)) {
        tags |= TagSet::Neg();
        rest.remove_prefix(kNegTag.size());
      } else {
        throw std::invalid_argument("unknown inline tag in '" +
                                    std::string(chunk) + "'");
      }
    }
    if (rest.find('\\') != std::string_view::npos)
      throw std::invalid_argument("misplaced inline tag in '" +
                                  std::string(chunk) + "'");
    out.tokens.push_back({std::string(gap), std::string(word), tags});
    if (!rest.empty()) out.tokens.push_back({"", std::string(rest), TagSet()});
  });
  return out;
}

std::string Detag(std::string_view tagged) {
  return ParseTaggedSentence(tagged).Raw();
}

}  // namespace sentpar
