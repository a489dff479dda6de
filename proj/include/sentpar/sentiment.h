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

#ifndef SENTPAR_SENTIMENT_H_
#define SENTPAR_SENTIMENT_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentpar {

// Subset of {POS, NEG}. Serialized as "POS", "NEG", "POS,NEG" or "-".
class TagSet {
 public:
  static constexpr std::uint8_t kPosBit = 1;
  static constexpr std::uint8_t kNegBit = 2;

  constexpr TagSet() = default;
  static constexpr TagSet FromBits(std::uint8_t bits) { return TagSet(bits & 3); }
  static constexpr TagSet Pos() { return TagSet(kPosBit); }
  static constexpr TagSet Neg() { return TagSet(kNegBit); }
  static constexpr TagSet Both() { return TagSet(kPosBit | kNegBit); }

  constexpr bool has_pos() const { return bits_ & kPosBit; }
  constexpr bool has_neg() const { return bits_ & kNegBit; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr TagSet operator|(TagSet o) const { return TagSet(bits_ | o.bits_); }
  constexpr TagSet operator&(TagSet o) const { return TagSet(bits_ & o.bits_); }
  TagSet &operator|=(TagSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool IsSubsetOf(TagSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr bool operator==(TagSet, TagSet) = default;

  std::string ToString() const;

 private:
  constexpr explicit TagSet(int bits) : bits_(static_cast<std::uint8_t>(bits)) {}
  std::uint8_t bits_ = 0;
};

enum class Language : std::uint8_t { kEnglish, kBengali };
enum class LexiconFormat : std::uint8_t { kLabeled, kScored };

std::string_view ToString(Language lang);

// Term -> non-empty polarity set. English terms are case-folded (ASCII) on
// insertion and lookup; Bengali terms match exactly.
class SentimentLexicon {
 public:
  explicit SentimentLexicon(Language language = Language::kEnglish)
      : language_(language) {}

  Language language() const { return language_; }
  const std::map<std::string, TagSet> &entries() const { return entries_; }
  const std::vector<std::string> &source_names() const { return sources_; }
  std::size_t size() const { return entries_.size(); }

  // Unions `tags` into the term's set. Empty sets are ignored.
  void Add(std::string_view term, TagSet tags);
  void AddSourceName(std::string name) { sources_.push_back(std::move(name)); }

  TagSet Lookup(std::string_view term) const;

  // Entry equality; source names are provenance only.
  bool SameEntries(const SentimentLexicon &other) const {
    return language_ == other.language_ && entries_ == other.entries_;
  }

 private:
  std::string Key(std::string_view term) const;

  Language language_;
  std::map<std::string, TagSet> entries_;
  std::vector<std::string> sources_;
};

// labeled: "term<TAB>POS|NEG"; scored: "term<TAB>signed number" (> 0 POS,
// < 0 NEG, 0 omitted). Blank lines and lines starting with '#' are skipped.
// Throws LineError for malformed lines and FormatError for unknown labels.
SentimentLexicon LoadLexicon(std::string_view text, LexiconFormat format,
                             Language language, const std::string &source_name);
SentimentLexicon LoadLexiconFile(const std::string &path, LexiconFormat format,
                                 Language language);

// Term-wise union. An empty list gives an empty English lexicon. Throws
// LanguageMismatchError when inputs disagree on language.
SentimentLexicon Merge(std::span<const SentimentLexicon> lexicons);

struct SentimentToken {
  std::string gap;  // whitespace preceding the token; empty for split-off punctuation
  std::string surface;
  TagSet tags;

  friend bool operator==(const SentimentToken &, const SentimentToken &) = default;
};

// A sentence whose tokens carry inline \POS / \NEG tags. Keeps the original
// whitespace so that Raw() reproduces the untagged input byte for byte.
struct TaggedSentence {
  std::vector<SentimentToken> tokens;
  std::string trailing;

  // "admired\POS", "শত্রু\POS\NEG": POS always before NEG.
  std::string Serialize() const;
  std::string Raw() const;
  TagSet tag_set() const;

  friend bool operator==(const TaggedSentence &, const TaggedSentence &) = default;
};

// Whitespace tokenization with trailing punctuation (ASCII or danda) split
// off into its own token. Lookup strips surrounding punctuation and, for
// English, folds case. Throws std::invalid_argument if the sentence contains
// a backslash, since that would make tags ambiguous.
TaggedSentence TagSentence(std::string_view sentence,
                           const SentimentLexicon &lexicon);

// Reads the serialized form back. Throws std::invalid_argument on a
// backslash that does not introduce POS or NEG.
TaggedSentence ParseTaggedSentence(std::string_view text);

// Removes inline tags: Detag(TagSentence(s, L).Serialize()) == s.
std::string Detag(std::string_view tagged);

}  // namespace sentpar

#endif  // SENTPAR_SENTIMENT_H_
