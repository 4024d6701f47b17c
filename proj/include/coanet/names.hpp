#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace coanet::names {

struct NormalizedName {
  std::string raw;         // original string as it appeared
  std::string normalized;  // lowercase ascii tokens, particles fused
  std::string last;        // family-name token
  std::string first;       // given-name token, may be a bare initial, may be empty
  std::vector<std::string> middle;
  bool is_initialized = false;  // first token is a bare initial

  bool operator==(const NormalizedName& o) const { return normalized == o.normalized; }
};

// Folds precomposed Latin letters to their ASCII base (canonical
// decomposition) and drops combining marks. Letters with no canonical
// decomposition to ASCII (ø, ł, æ, ...) are dropped, as are all other
// non-Latin codepoints. Invalid UTF-8 bytes are dropped.
std::string strip_diacritics(const std::string& utf8);

// Full normalization: diacritic fold, lowercase, punctuation to spaces
// (keeping internal hyphens and apostrophes), "Last, First" reordering,
// nobiliary particles fused into the following token. Returns nullopt when
// nothing parseable remains.
std::optional<NormalizedName> normalize_name(const std::string& raw);

// True when every hyphen/apostrophe-separated part is a single letter.
bool token_is_initial(const std::string& token);

// True when one side abbreviates the other: same last name, each given
// token of the shorter side matches the corresponding token of the longer
// positionally, initials matching by first letter (hyphenated parts
// part-wise) and full tokens requiring equality.
bool is_initial_expansion(const NormalizedName& a, const NormalizedName& b);

std::size_t levenshtein(const std::string& a, const std::string& b);

// Banded variant: exact distance when it is <= limit, otherwise any value
// > limit. Used for bulk comparisons where only near matches matter.
std::size_t levenshtein_bounded(const std::string& a, const std::string& b, std::size_t limit);

// 1 - distance / max(len); 1.0 for two empty strings.
double string_similarity(const std::string& a, const std::string& b);

// Symmetric nickname table (robert/bob, william/bill, ...).
class NameVariantTable {
 public:
  static const NameVariantTable& builtin();
  // CSV without header, two columns per line: name,variant.
  static NameVariantTable from_csv(const std::string& path);

  void add(const std::string& a, const std::string& b);
  bool variants(const std::string& a, const std::string& b) const;
  std::size_t size() const { return pairs_.size(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

// Romanized-syllable lexicon; a token is flagged when it segments
// completely into known syllables.
class PinyinLexicon {
 public:
  static const PinyinLexicon& builtin();
  // Plain text, one syllable per line; '#' comments allowed.
  static PinyinLexicon from_file(const std::string& path);

  void add(const std::string& syllable);
  bool is_syllable(const std::string& s) const { return syllables_.count(s) > 0; }
  // Segments token parts (split on hyphen/apostrophe) over the lexicon.
  bool decomposes(const std::string& token) const;
  std::size_t size() const { return syllables_.size(); }

 private:
  std::unordered_set<std::string> syllables_;
  std::size_t max_len_ = 0;
};

// Full given-name tokens match when equal, listed as nickname variants, or
// above the similarity threshold for their origin class (the stricter
// pinyin threshold applies when either token segments over the lexicon).
bool first_names_compatible(const std::string& a, const std::string& b,
                            const NameVariantTable& variants, const PinyinLexicon& pinyin,
                            double pinyin_threshold, double western_threshold);

}  // namespace coanet::names
