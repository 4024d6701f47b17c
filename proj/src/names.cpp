#include "coanet/names.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "coanet/util.hpp"

namespace coanet::names {

namespace {

// Canonical-decomposition fold for Latin letters: precomposed letter ->
// ASCII base. Letters without a canonical decomposition (ø, ł, æ, đ, ...)
// are intentionally absent and get dropped, mirroring NFD + ASCII filter.
const std::unordered_map<char32_t, char>& fold_table() {
  static const std::unordered_map<char32_t, char> table = [] {
    std::unordered_map<char32_t, char> t;
    auto put = [&](std::initializer_list<unsigned> cps, char c) {
      for (unsigned cp : cps) t[static_cast<char32_t>(cp)] = c;
    };
    put({0xC0, 0xC1, 0xC2, 0xC3, 0xC4, 0xC5, 0x100, 0x102, 0x104, 0x1CD, 0x1DE, 0x1E0,
         0x1FA, 0x200, 0x202, 0x226}, 'A');
    put({0xE0, 0xE1, 0xE2, 0xE3, 0xE4, 0xE5, 0x101, 0x103, 0x105, 0x1CE, 0x1DF, 0x1E1,
         0x1FB, 0x201, 0x203, 0x227}, 'a');
    put({0xC7, 0x106, 0x108, 0x10A, 0x10C}, 'C');
    put({0xE7, 0x107, 0x109, 0x10B, 0x10D}, 'c');
    put({0x10E}, 'D');
    put({0x10F}, 'd');
    put({0xC8, 0xC9, 0xCA, 0xCB, 0x112, 0x114, 0x116, 0x118, 0x11A, 0x204, 0x206, 0x228},
        'E');
    put({0xE8, 0xE9, 0xEA, 0xEB, 0x113, 0x115, 0x117, 0x119, 0x11B, 0x205, 0x207, 0x229},
        'e');
    put({0x11C, 0x11E, 0x120, 0x122, 0x1E6, 0x1F4}, 'G');
    put({0x11D, 0x11F, 0x121, 0x123, 0x1E7, 0x1F5}, 'g');
    put({0x124, 0x21E}, 'H');
    put({0x125, 0x21F}, 'h');
    put({0xCC, 0xCD, 0xCE, 0xCF, 0x128, 0x12A, 0x12C, 0x12E, 0x130, 0x1CF, 0x208, 0x20A},
        'I');
    put({0xEC, 0xED, 0xEE, 0xEF, 0x129, 0x12B, 0x12D, 0x12F, 0x1D0, 0x209, 0x20B}, 'i');
    put({0x134}, 'J');
    put({0x135, 0x1F0}, 'j');
    put({0x136, 0x1E8}, 'K');
    put({0x137, 0x1E9}, 'k');
    put({0x139, 0x13B, 0x13D}, 'L');
    put({0x13A, 0x13C, 0x13E}, 'l');
    put({0xD1, 0x143, 0x145, 0x147, 0x1F8}, 'N');
    put({0xF1, 0x144, 0x146, 0x148, 0x1F9}, 'n');
    put({0xD2, 0xD3, 0xD4, 0xD5, 0xD6, 0x14C, 0x14E, 0x150, 0x1D1, 0x1EA, 0x1EC, 0x20C,
         0x20E, 0x22A, 0x22C, 0x22E, 0x230}, 'O');
    put({0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0x14D, 0x14F, 0x151, 0x1D2, 0x1EB, 0x1ED, 0x20D,
         0x20F, 0x22B, 0x22D, 0x22F, 0x231}, 'o');
    put({0x154, 0x156, 0x158, 0x210, 0x212}, 'R');
    put({0x155, 0x157, 0x159, 0x211, 0x213}, 'r');
    put({0x15A, 0x15C, 0x15E, 0x160, 0x218}, 'S');
    put({0x15B, 0x15D, 0x15F, 0x161, 0x219}, 's');
    put({0x162, 0x164, 0x21A}, 'T');
    put({0x163, 0x165, 0x21B}, 't');
    put({0xD9, 0xDA, 0xDB, 0xDC, 0x168, 0x16A, 0x16C, 0x16E, 0x170, 0x172, 0x1D3, 0x1D5,
         0x1D7, 0x1D9, 0x1DB, 0x214, 0x216}, 'U');
    put({0xF9, 0xFA, 0xFB, 0xFC, 0x169, 0x16B, 0x16D, 0x16F, 0x171, 0x173, 0x1D4, 0x1D6,
         0x1D8, 0x1DA, 0x1DC, 0x215, 0x217}, 'u');
    put({0x174}, 'W');
    put({0x175}, 'w');
    put({0xDD, 0x176, 0x178, 0x232}, 'Y');
    put({0xFD, 0xFF, 0x177, 0x233}, 'y');
    put({0x179, 0x17B, 0x17D}, 'Z');
    put({0x17A, 0x17C, 0x17E}, 'z');
    return t;
  }();
  return table;
}

// Decodes the next UTF-8 codepoint; advances i past it. Invalid bytes
// decode as 0xFFFD and advance by one.
char32_t next_codepoint(const std::string& s, std::size_t& i) {
  unsigned char c = s[i];
  if (c < 0x80) {
    ++i;
    return c;
  }
  int extra;
  char32_t cp;
  if ((c & 0xE0) == 0xC0) {
    extra = 1;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    extra = 2;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    extra = 3;
    cp = c & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + extra >= s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char cc = s[i + k];
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += extra + 1;
  return cp;
}

bool is_particle(const std::string& tok) {
  static const std::unordered_set<std::string> particles = {
      "van", "von", "vander", "vanden", "vande", "der", "den", "de",  "del",
      "della", "delle", "di", "da", "dal", "dos", "das", "du", "la", "le",
      "lo", "el", "al", "bin", "ibn", "ben", "ter", "ten", "op"};
  return particles.count(tok) > 0;
}

std::vector<std::string> split_parts(const std::string& token) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : token) {
    if (c == '-' || c == '\'') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool initial_matches(const std::string& initial, const std::string& full) {
  auto ip = split_parts(initial);
  auto fp = split_parts(full);
  if (ip.size() == 1) return !full.empty() && ip[0][0] == full[0];
  if (ip.size() != fp.size()) return false;
  for (std::size_t i = 0; i < ip.size(); ++i)
    if (fp[i].empty() || ip[i][0] != fp[i][0]) return false;
  return true;
}

std::vector<std::string> given_tokens(const NormalizedName& n) {
  std::vector<std::string> out;
  if (!n.first.empty()) out.push_back(n.first);
  out.insert(out.end(), n.middle.begin(), n.middle.end());
  return out;
}

// abbr's given tokens each match full's positionally; at least one token
// on the abbreviated side must be a bare initial, so plain subsets and
// names that merely leave a full side's initial unexplained do not count.
bool expands(const NormalizedName& abbr, const NormalizedName& full) {
  auto ga = given_tokens(abbr);
  auto gf = given_tokens(full);
  if (ga.empty() || gf.empty() || ga.size() > gf.size()) return false;
  bool any_initial = false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    bool ia = token_is_initial(ga[i]);
    bool ib = token_is_initial(gf[i]);
    if (ia) any_initial = true;
    if (ia && !ib) {
      if (!initial_matches(ga[i], gf[i])) return false;
    } else if (ib && !ia) {
      if (!initial_matches(gf[i], ga[i])) return false;
    } else if (ga[i] != gf[i]) {
      return false;
    }
  }
  return any_initial;
}

}  // namespace

std::string strip_diacritics(const std::string& utf8) {
  std::string out;
  out.reserve(utf8.size());
  const auto& table = fold_table();
  std::size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = next_codepoint(utf8, i);
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp >= 0x300 && cp <= 0x36F) {
      // combining mark, drop
    } else if (auto it = table.find(cp); it != table.end()) {
      out += it->second;
    }
  }
  return out;
}

bool token_is_initial(const std::string& token) {
  if (token.empty()) return false;
  for (const auto& part : split_parts(token)) {
    if (part.size() != 1) return false;
    if (!std::isalpha(static_cast<unsigned char>(part[0]))) return false;
  }
  return true;
}

std::optional<NormalizedName> normalize_name(const std::string& raw) {
  NormalizedName nn;
  nn.raw = raw;

  std::string s = raw;
  auto comma = s.find(',');
  if (comma != std::string::npos) {
    // "Last, First [suffix]" inversion; later commas become separators
    std::string last_part = s.substr(0, comma);
    std::string rest = s.substr(comma + 1);
    for (char& c : rest) {
      if (c == ',') c = ' ';
    }
    s = rest + " " + last_part;
  }
  s = to_lower(strip_diacritics(s));

  for (char& c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '-' && c != '\'') c = ' ';
  }

  std::vector<std::string> tokens;
  std::istringstream ss(s);
  std::string piece;
  while (ss >> piece) {
    // trim separator chars at the edges, collapse runs inside
    std::string tok;
    for (char c : piece) {
      if ((c == '-' || c == '\'')) {
        if (tok.empty() || tok.back() == '-' || tok.back() == '\'') continue;
      }
      tok += c;
    }
    while (!tok.empty() && (tok.back() == '-' || tok.back() == '\'')) tok.pop_back();
    if (!tok.empty()) tokens.push_back(tok);
  }
  if (tokens.empty()) return std::nullopt;

  std::vector<std::string> fused;
  std::string pending;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    // a lone particle opening the name is a given name (Ben, Van, Della);
    // only a leading particle run belongs to the surname cluster
    bool leading = fused.empty() && pending.empty();
    bool opens_run = t + 1 < tokens.size() && is_particle(tokens[t + 1]);
    if (is_particle(tok) && (!leading || opens_run)) {
      pending += tok;
      continue;
    }
    fused.push_back(pending + tok);
    pending.clear();
  }
  if (!pending.empty()) fused.push_back(pending);  // name ends in particles

  nn.last = fused.back();
  if (fused.size() >= 2) {
    nn.first = fused.front();
    nn.middle.assign(fused.begin() + 1, fused.end() - 1);
  }
  nn.normalized.clear();
  for (std::size_t i = 0; i < fused.size(); ++i) {
    if (i) nn.normalized += ' ';
    nn.normalized += fused[i];
  }
  nn.is_initialized = !nn.first.empty() && token_is_initial(nn.first);
  return nn;
}

bool is_initial_expansion(const NormalizedName& a, const NormalizedName& b) {
  if (a.last != b.last) return false;
  return expands(a, b) || expands(b, a);
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t levenshtein_bounded(const std::string& a, const std::string& b,
                                std::size_t limit) {
  const std::string& s = a.size() <= b.size() ? a : b;
  const std::string& t = a.size() <= b.size() ? b : a;
  const std::size_t n = s.size(), m = t.size();
  if (m - n > limit) return limit + 1;
  const std::size_t inf = limit + 1;
  std::vector<std::size_t> prev(m + 1, inf), cur(m + 1, inf);
  for (std::size_t j = 0; j <= std::min(m, limit); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t lo = i > limit ? i - limit : 0;
    std::size_t hi = std::min(m, i + limit);
    std::fill(cur.begin(), cur.end(), inf);
    if (lo == 0) cur[0] = i;
    std::size_t row_min = inf;
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      std::size_t best = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      if (prev[j] + 1 < best) best = prev[j] + 1;
      if (cur[j - 1] + 1 < best) best = cur[j - 1] + 1;
      cur[j] = std::min(best, inf);
      row_min = std::min(row_min, cur[j]);
    }
    if (lo == 0) row_min = std::min(row_min, cur[0]);
    if (row_min >= inf) return inf;
    std::swap(prev, cur);
  }
  return prev[m];
}

double string_similarity(const std::string& a, const std::string& b) {
  std::size_t maxlen = std::max(a.size(), b.size());
  if (maxlen == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(maxlen);
}

namespace {

bool similarity_exceeds(const std::string& a, const std::string& b, double threshold) {
  std::size_t maxlen = std::max(a.size(), b.size());
  if (maxlen == 0) return 1.0 > threshold;
  auto limit = static_cast<std::size_t>((1.0 - threshold) * static_cast<double>(maxlen)) + 1;
  std::size_t dist = levenshtein_bounded(a, b, limit);
  if (dist > limit) return false;
  return 1.0 - static_cast<double>(dist) / static_cast<double>(maxlen) > threshold;
}

}  // namespace

const NameVariantTable& NameVariantTable::builtin() {
  static const NameVariantTable table = [] {
    NameVariantTable t;
    extern const char* const kDiminutivePairs[][2];
    extern const std::size_t kDiminutivePairCount;
    for (std::size_t i = 0; i < kDiminutivePairCount; ++i)
      t.add(kDiminutivePairs[i][0], kDiminutivePairs[i][1]);
    return t;
  }();
  return table;
}

NameVariantTable NameVariantTable::from_csv(const std::string& path) {
  NameVariantTable t;
  std::istringstream in(read_text_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto fields = split(stripped, ',');
    if (fields.size() != 2)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected name,variant");
    t.add(to_lower(trim(fields[0])), to_lower(trim(fields[1])));
  }
  return t;
}

void NameVariantTable::add(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty() || a == b) return;
  pairs_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

bool NameVariantTable::variants(const std::string& a, const std::string& b) const {
  if (a == b) return false;
  return pairs_.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
}

const PinyinLexicon& PinyinLexicon::builtin() {
  static const PinyinLexicon lex = [] {
    PinyinLexicon p;
    extern const char* const kPinyinSyllables[];
    extern const std::size_t kPinyinSyllableCount;
    for (std::size_t i = 0; i < kPinyinSyllableCount; ++i) p.add(kPinyinSyllables[i]);
    return p;
  }();
  return lex;
}

PinyinLexicon PinyinLexicon::from_file(const std::string& path) {
  PinyinLexicon p;
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    p.add(to_lower(s));
  }
  return p;
}

void PinyinLexicon::add(const std::string& syllable) {
  if (syllable.empty()) return;
  syllables_.insert(syllable);
  max_len_ = std::max(max_len_, syllable.size());
}

bool PinyinLexicon::decomposes(const std::string& token) const {
  if (token.empty() || syllables_.empty()) return false;
  for (const auto& part : split_parts(token)) {
    if (part.empty()) return false;
    for (char c : part)
      if (!std::isalpha(static_cast<unsigned char>(c))) return false;
    const std::size_t len = part.size();
    std::vector<char> can(len + 1, 0);
    can[0] = 1;
    for (std::size_t i = 1; i <= len; ++i) {
      std::size_t lo = i > max_len_ ? i - max_len_ : 0;
      for (std::size_t j = lo; j < i; ++j) {
        if (can[j] && syllables_.count(part.substr(j, i - j))) {
          can[i] = 1;
          break;
        }
      }
    }
    if (!can[len]) return false;
  }
  return true;
}

bool first_names_compatible(const std::string& a, const std::string& b,
                            const NameVariantTable& variants, const PinyinLexicon& pinyin,
                            double pinyin_threshold, double western_threshold) {
  if (a == b) return true;
  if (variants.variants(a, b)) return true;
  // romanized-syllable names have a dense variant space, hold them to the
  // stricter threshold whenever either side is flagged
  double thr = (pinyin.decomposes(a) || pinyin.decomposes(b)) ? pinyin_threshold
                                                              : western_threshold;
  return similarity_exceeds(a, b, thr);
}

}  // namespace coanet::names
