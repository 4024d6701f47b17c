#include "coanet/synthetic.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coanet/csv.hpp"
#include "coanet/util.hpp"

namespace coanet::synth {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

const char* const kGivenPool[] = {
    "Alice",  "Bruno",  "Clara",  "Denis",  "Elena",  "Felix",  "Grace",  "Henry",
    "Irene",  "Jonas",  "Karim",  "Laura",  "Marco",  "Nadia",  "Oscar",  "Paula",
    "Quinn",  "Rosa",   "Simon",  "Tessa",  "Umar",   "Vera",   "Wendy",  "Xavier",
    "Yara",   "Zeno",   "Anders", "Bianca", "Carmen", "Dmitri", "Eva",    "Farid",
    "Greta",  "Hugo",   "Ines",   "Jana",   "Kenji",  "Lena",   "Mateo",  "Nora",
};
constexpr std::size_t kGivenPoolSize = sizeof(kGivenPool) / sizeof(kGivenPool[0]);

PaperRecord make_paper(int topic_id, const std::string& id, const std::string& category,
                       std::vector<std::string> authors, int seq) {
  PaperRecord rec;
  rec.paper_id = id;
  rec.title = "Study " + id;
  rec.authors = std::move(authors);
  rec.categories = {category};
  rec.date = Date{2024, 1 + seq % 12, 1 + seq % 28};
  rec.topic_id = topic_id;
  return rec;
}

std::string topic_author(int topic_id, int idx) {
  return std::string(kGivenPool[static_cast<std::size_t>(idx) % kGivenPoolSize]) + " G" +
         std::to_string(topic_id) + "N" + std::to_string(idx);
}

}  // namespace

void ModularSpec::validate() const {
  if (topics < 1) throw ValidationError("modular spec: topics must be >= 1");
  if (communities < 1) throw ValidationError("modular spec: communities must be >= 1");
  if (community_size < 2) throw ValidationError("modular spec: community size must be >= 2");
  if (intra_papers < community_size - 1)
    throw ValidationError("modular spec: intra papers must be >= community size - 1");
  if (clique_size < 0 || clique_size > community_size)
    throw ValidationError("modular spec: clique size must fit inside a community");
  if (bridge_papers < 0 || solo_papers < 0 || jitter_papers < 0)
    throw ValidationError("modular spec: paper counts must be >= 0");
}

void CorePeripherySpec::validate() const {
  if (topics < 1) throw ValidationError("core-periphery spec: topics must be >= 1");
  if (core_size < 1) throw ValidationError("core-periphery spec: core size must be >= 1");
  if (periphery_size < 0)
    throw ValidationError("core-periphery spec: periphery size must be >= 0");
  if (repeat_papers < 0 || solo_papers < 0 || jitter_papers < 0)
    throw ValidationError("core-periphery spec: paper counts must be >= 0");
}

SyntheticCorpus generate_modular(const ModularSpec& spec) {
  spec.validate();
  SyntheticCorpus out;
  for (int t = 0; t < spec.topics; ++t) {
    int topic = spec.first_topic_id + t;
    std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(topic)));
    const int k = spec.communities;
    const int s = spec.community_size;
    std::vector<std::vector<std::string>> community(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < s; ++i)
        community[static_cast<std::size_t>(c)].push_back(topic_author(topic, c * s + i));

    int seq = 0;
    auto add = [&](const std::string& a, const std::string& b) {
      out.records.push_back(make_paper(topic, "m" + std::to_string(topic) + "p" +
                                                  std::to_string(seq),
                                       "synthetic.modular", {a, b}, seq));
      ++seq;
    };
    for (int c = 0; c < k; ++c) {
      const auto& m = community[static_cast<std::size_t>(c)];
      // a path first so every author appears and the community is connected
      for (int i = 0; i + 1 < s; ++i)
        add(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i + 1)]);
      for (int e = 0; e < spec.intra_papers - (s - 1); ++e) {
        auto a = draw(rng, static_cast<std::uint64_t>(s));
        auto b = draw(rng, static_cast<std::uint64_t>(s - 1));
        if (b >= a) ++b;
        add(m[a], m[b]);
      }
    }
    for (int i = 0; i < spec.clique_size; ++i)
      for (int j = i + 1; j < spec.clique_size; ++j)
        add(community[0][static_cast<std::size_t>(i)], community[0][static_cast<std::size_t>(j)]);
    for (int b = 0; b < spec.bridge_papers; ++b) {
      int c = b % k;
      const auto& from = community[static_cast<std::size_t>(c)];
      const auto& to = community[static_cast<std::size_t>((c + 1) % k)];
      add(from[draw(rng, from.size())], to[draw(rng, to.size())]);
    }
    auto extra = draw(rng, static_cast<std::uint64_t>(spec.jitter_papers) + 1);
    for (std::uint64_t e = 0; e < extra; ++e) {
      const auto& m = community[draw(rng, static_cast<std::uint64_t>(k))];
      auto a = draw(rng, static_cast<std::uint64_t>(s));
      auto b = draw(rng, static_cast<std::uint64_t>(s - 1));
      if (b >= a) ++b;
      add(m[a], m[b]);
    }
    for (int i = 0; i < spec.solo_papers; ++i) {
      const auto& m = community[draw(rng, static_cast<std::uint64_t>(k))];
      out.records.push_back(make_paper(topic, "m" + std::to_string(topic) + "p" +
                                                  std::to_string(seq),
                                       "synthetic.modular", {m[draw(rng, m.size())]}, seq));
      ++seq;
    }

    TopicTruth truth;
    truth.topic_id = topic;
    truth.structure = "planted-modular";
    truth.groups = community;
    out.truth.push_back(std::move(truth));
  }
  return out;
}

SyntheticCorpus generate_core_periphery(const CorePeripherySpec& spec) {
  spec.validate();
  SyntheticCorpus out;
  for (int t = 0; t < spec.topics; ++t) {
    int topic = spec.first_topic_id + t;
    std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(topic)));
    std::vector<std::string> core, periphery;
    for (int i = 0; i < spec.core_size; ++i) core.push_back(topic_author(topic, i));
    for (int j = 0; j < spec.periphery_size; ++j)
      periphery.push_back(topic_author(topic, spec.core_size + j));

    int seq = 0;
    auto add = [&](std::vector<std::string> authors) {
      out.records.push_back(make_paper(topic, "c" + std::to_string(topic) + "p" +
                                                  std::to_string(seq),
                                       "synthetic.core", std::move(authors), seq));
      ++seq;
    };
    const int m = spec.core_size;
    if (m == 2) {
      add({core[0], core[1]});
    } else if (m >= 3) {
      // three overlapping papers over thirds A, B, C cover every core pair,
      // so the core is a clique after expansion
      int a = m / 3, b = (2 * m) / 3;
      std::vector<std::string> ab(core.begin(), core.begin() + b);
      std::vector<std::string> bc(core.begin() + a, core.end());
      std::vector<std::string> ac(core.begin(), core.begin() + a);
      ac.insert(ac.end(), core.begin() + b, core.end());
      add(ab);
      add(bc);
      add(ac);
    }
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& p : periphery) {
      links.emplace_back(p, core[draw(rng, core.size())]);
      add({links.back().first, links.back().second});
    }
    int repeats = std::min<int>(spec.repeat_papers, static_cast<int>(links.size()));
    for (int i = 0; i < repeats; ++i) add({links[static_cast<std::size_t>(i)].first,
                                          links[static_cast<std::size_t>(i)].second});
    auto extra = draw(rng, static_cast<std::uint64_t>(spec.jitter_papers) + 1);
    for (std::uint64_t e = 0; e < extra && !periphery.empty(); ++e)
      add({periphery[draw(rng, periphery.size())], core[draw(rng, core.size())]});
    for (int i = 0; i < spec.solo_papers; ++i) add({core[draw(rng, core.size())]});

    TopicTruth truth;
    truth.topic_id = topic;
    truth.structure = "core-periphery";
    truth.groups = {core, periphery};
    out.truth.push_back(std::move(truth));
  }
  return out;
}

namespace {

// Name pools for the identity corpus. Diacritic entries use only letters
// with canonical decompositions, so the stripped spelling is the exact
// normalized form.
const char* const kWesternGiven[] = {
    "James",  "Mary",    "Robert", "Linda",  "Michael", "Sarah",  "David",  "Karen",
    "Richard", "Nancy",  "Charles", "Betty", "Thomas",  "Helen",  "Mark",   "Diane",
    "Steven", "Julia",   "Paul",   "Emily",  "Andrew",  "Donna",  "Joshua", "Carol",
    "Kevin",  "Amanda",  "Brian",  "Laura",  "George",  "Amy",    "Edmund", "Clare",
};
constexpr std::size_t kWesternGivenSize = sizeof(kWesternGiven) / sizeof(kWesternGiven[0]);

const char* const kMiddlePool[] = {
    "Bradley", "Carter", "Dean",  "Ellis",  "Foster", "Grant", "Hayes", "Irving",
    "Jordan",  "Keith",  "Logan", "Mason",  "Nolan",  "Owen",  "Parker", "Reed",
};
constexpr std::size_t kMiddlePoolSize = sizeof(kMiddlePool) / sizeof(kMiddlePool[0]);

const char* const kWesternSurname[] = {
    "Smith",  "Johnson", "Williams", "Brown",  "Jones",  "Miller", "Davis",  "Wilson",
    "Taylor", "Moore",   "Jackson",  "Martin", "Lee",    "White",  "Harris", "Clark",
    "Lewis",  "Walker",  "Young",    "Allen",  "King",   "Wright", "Hill",   "Green",
    "Adams",  "Baker",   "Nelson",   "Carter", "Turner", "Evans",  "Collins", "Stewart",
    "Morris", "Rogers",  "Cook",     "Morgan", "Bell",   "Murphy", "Bailey", "Cooper",
};
constexpr std::size_t kWesternSurnameSize = sizeof(kWesternSurname) / sizeof(kWesternSurname[0]);

struct AsciiPair {
  const char* display;
  const char* ascii;
};

const AsciiPair kDiacriticGiven[] = {
    {"José", "Jose"},         {"André", "Andre"},
    {"François", "Francois"}, {"Renée", "Renee"},
    {"Agnès", "Agnes"},       {"Céline", "Celine"},
    {"Tomáš", "Tomas"},  {"Jiří", "Jiri"},
    {"Věra", "Vera"},         {"Inés", "Ines"},
    {"Zoë", "Zoe"},           {"Chloé", "Chloe"},
    {"Jürgen", "Jurgen"},     {"Björn", "Bjorn"},
    {"Sébastien", "Sebastien"}, {"Michèle", "Michele"},
};
constexpr std::size_t kDiacriticGivenSize = sizeof(kDiacriticGiven) / sizeof(kDiacriticGiven[0]);

const AsciiPair kDiacriticSurname[] = {
    {"García", "Garcia"},         {"Fernández", "Fernandez"},
    {"Gómez", "Gomez"},           {"Pérez", "Perez"},
    {"Müller", "Muller"},         {"Schäfer", "Schafer"},
    {"Novák", "Novak"},           {"Dvořák", "Dvorak"},
    {"Kučera", "Kucera"},         {"Gutiérrez", "Gutierrez"},
    {"Rodríguez", "Rodriguez"},   {"López", "Lopez"},
    {"Hernández", "Hernandez"},   {"Sánchez", "Sanchez"},
    {"Ramírez", "Ramirez"},       {"Procházka", "Prochazka"},
};
constexpr std::size_t kDiacriticSurnameSize =
    sizeof(kDiacriticSurname) / sizeof(kDiacriticSurname[0]);

// Same-initial entries of the built-in diminutive table; the initial form
// bridges them into one component, the dictionary keeps it together.
const AsciiPair kDiminutive[] = {
    {"Alexander", "Alex"}, {"Andrew", "Andy"},     {"Benjamin", "Ben"},
    {"Catherine", "Cathy"}, {"Christopher", "Chris"}, {"Daniel", "Dan"},
    {"David", "Dave"},     {"Donald", "Don"},      {"Douglas", "Doug"},
    {"Edward", "Ed"},      {"Frederick", "Fred"},  {"Gregory", "Greg"},
    {"Harold", "Harry"},   {"James", "Jim"},       {"Jennifer", "Jen"},
    {"John", "Jack"},      {"Joseph", "Joe"},      {"Katherine", "Kate"},
    {"Kenneth", "Ken"},    {"Lawrence", "Larry"},  {"Margaret", "Maggie"},
    {"Matthew", "Matt"},   {"Michael", "Mike"},    {"Nicholas", "Nick"},
    {"Pamela", "Pam"},     {"Patrick", "Pat"},     {"Peter", "Pete"},
    {"Philip", "Phil"},    {"Richard", "Rick"},    {"Robert", "Rob"},
    {"Ronald", "Ron"},     {"Samuel", "Sam"},      {"Stanley", "Stan"},
    {"Stephen", "Steve"},  {"Susan", "Sue"},       {"Theodore", "Theo"},
    {"Thomas", "Tom"},     {"Timothy", "Tim"},     {"Valerie", "Val"},
    {"Vincent", "Vince"},  {"Walter", "Walt"},     {"William", "Will"},
    {"Zachary", "Zach"},
};
constexpr std::size_t kDiminutiveSize = sizeof(kDiminutive) / sizeof(kDiminutive[0]);

const char* const kPinyinGiven[] = {
    "Pengcheng", "Xiaoming", "Jianhua", "Weimin",  "Zhiqiang", "Lihua",
    "Haoran",    "Mengyao",  "Yuting",  "Xinyi",   "Junjie",   "Zihan",
    "Ruoxi",     "Chenglong", "Guanyu", "Meiling", "Wenjie",   "Zhenyu",
};
constexpr std::size_t kPinyinGivenSize = sizeof(kPinyinGiven) / sizeof(kPinyinGiven[0]);

const char* const kPinyinSurname[] = {
    "Xie", "Zhang", "Wang", "Li",  "Chen", "Liu", "Yang", "Huang", "Zhao", "Wu",
    "Zhou", "Xu",   "Sun",  "Ma",  "Zhu",  "Hu",  "Guo",  "Gao",   "Lin",  "Han",
};
constexpr std::size_t kPinyinSurnameSize = sizeof(kPinyinSurname) / sizeof(kPinyinSurname[0]);

const AsciiPair kPinyinSplit[] = {
    {"Pengcheng", "Peng Cheng"}, {"Xiaoming", "Xiao Ming"}, {"Jianhua", "Jian Hua"},
    {"Zhiqiang", "Zhi Qiang"},   {"Meiling", "Mei Ling"},   {"Chenglong", "Cheng Long"},
    {"Guanyu", "Guan Yu"},       {"Wenjie", "Wen Jie"},     {"Zhenyu", "Zhen Yu"},
    {"Haoran", "Hao Ran"},
};
constexpr std::size_t kPinyinSplitSize = sizeof(kPinyinSplit) / sizeof(kPinyinSplit[0]);

// Confusable distinct-author pairs; every pairing stays below both the
// edge threshold on full strings and the stage-2 given-name thresholds.
const AsciiPair kPinyinTrap[] = {
    {"Pengcheng", "Pengxu"}, {"Xiaoming", "Xiaomin"}, {"Jianhua", "Jianhui"},
    {"Weimin", "Weiming"},   {"Zhiqiang", "Zhiqian"}, {"Lihua", "Lihui"},
};
constexpr std::size_t kPinyinTrapSize = sizeof(kPinyinTrap) / sizeof(kPinyinTrap[0]);

const AsciiPair kWesternTrap[] = {
    {"John", "Jane"},     {"Daniel", "Daniela"}, {"Robert", "Roberta"},
    {"Martin", "Martina"}, {"Paul", "Paula"},    {"Carl", "Carla"},
};
constexpr std::size_t kWesternTrapSize = sizeof(kWesternTrap) / sizeof(kWesternTrap[0]);

const AsciiPair kShortTrap[] = {
    {"Wei", "Weimin"}, {"Li", "Lijun"}, {"Yu", "Yuhan"}, {"Jian", "Jianbo"},
};
constexpr std::size_t kShortTrapSize = sizeof(kShortTrap) / sizeof(kShortTrap[0]);

const char* const kHelperGiven[] = {"Yun", "Mei", "Tao", "Lan", "Fang", "Bo"};
constexpr std::size_t kHelperGivenSize = sizeof(kHelperGiven) / sizeof(kHelperGiven[0]);

enum class Template {
  kInitialism,
  kMiddle,
  kDiacritic,
  kDiminutive,
  kPinyinInitial,
  kPinyinSplit,
  kTrap,
  kSingleton,
};

struct CorpusBuilder {
  explicit CorpusBuilder(const NameCorpusSpec& spec)
      : spec(spec), rng(derive_seed(spec.seed, 0xc0de)) {
    if (spec.surname_pool > 0) {
      double total = 0.0;
      for (int r = 0; r < spec.surname_pool; ++r) {
        total += 1.0 / static_cast<double>(r + 1);
        zipf_cum.push_back(total);
      }
    }
  }

  const NameCorpusSpec& spec;
  NameCorpus out;
  std::mt19937_64 rng;
  std::set<std::string> used;
  std::vector<double> zipf_cum;
  int paper_seq = 0;
  int identity_seq = 0;

  std::string shared_surname() {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * zipf_cum.back();
    auto it = std::lower_bound(zipf_cum.begin(), zipf_cum.end(), u);
    auto rank = static_cast<std::size_t>(it - zipf_cum.begin());
    std::size_t base = kWesternSurnameSize + kPinyinSurnameSize;
    if (rank < kWesternSurnameSize) return kWesternSurname[rank];
    if (rank < base) return kPinyinSurname[rank - kWesternSurnameSize];
    return "Fam" + std::to_string(rank - base);
  }

  // Unique surname stems keep gold blocks free of cross-identity noise.
  std::string surname_for(int ordinal, const char* stem) {
    if (spec.surname_pool > 0) return shared_surname();
    return std::string(stem) + std::to_string(ordinal);
  }

  bool add_raw(const std::string& raw, int identity, bool gold) {
    if (!used.insert(raw).second) return false;
    ++out.raw_count;
    if (gold) out.raw_identity.emplace_back(raw, identity);
    return true;
  }

  void solo_paper(const std::string& raw) {
    PaperRecord rec = make_paper(1, "p" + std::to_string(paper_seq), "synthetic.names",
                                 {raw}, paper_seq);
    out.records.push_back(std::move(rec));
    ++paper_seq;
  }

  void pair_paper(const std::string& a, const std::string& b) {
    PaperRecord rec = make_paper(1, "p" + std::to_string(paper_seq), "synthetic.names",
                                 {a, b}, paper_seq);
    out.records.push_back(std::move(rec));
    ++paper_seq;
  }

  void true_pairs_among(const std::vector<std::string>& raws) {
    for (std::size_t i = 0; i < raws.size(); ++i)
      for (std::size_t j = i + 1; j < raws.size(); ++j)
        out.true_pairs.push_back({raws[i], raws[j]});
  }

  // Emits the identity's accepted raws as solo papers and records gold
  // pairs among them.
  void finish_identity(int identity, const std::vector<std::string>& accepted) {
    for (const auto& r : accepted) solo_paper(r);
    true_pairs_among(accepted);
  }

  std::vector<std::string> accept(int identity, const std::vector<std::string>& raws,
                                  bool gold = true) {
    std::vector<std::string> accepted;
    for (const auto& r : raws)
      if (add_raw(r, identity, gold)) accepted.push_back(r);
    return accepted;
  }

  std::string mutate_given(const std::string& given, int ordinal) {
    return given + std::to_string(ordinal);
  }

  // One helper author with its own identity; used as shared or disjoint
  // co-occurrence evidence.
  std::string helper_raw(int ordinal) {
    int id = identity_seq++;
    std::string raw = std::string(kHelperGiven[static_cast<std::size_t>(ordinal) %
                                               kHelperGivenSize]) +
                      " Hq" + std::to_string(ordinal);
    if (!add_raw(raw, id, true)) {
      raw += "x";
      add_raw(raw, id, true);
    }
    return raw;
  }

  void emit_initialism(int ordinal) {
    int id = identity_seq++;
    std::string given = kWesternGiven[static_cast<std::size_t>(ordinal) % kWesternGivenSize];
    std::string surname = surname_for(ordinal, "Keller");
    std::string full = given + " " + surname;
    if (spec.surname_pool > 0 && used.count(full)) {
      given = mutate_given(given, ordinal);
      full = given + " " + surname;
    }
    auto accepted = accept(id, {full, given.substr(0, 1) + ". " + surname});
    finish_identity(id, accepted);
  }

  void emit_middle(int ordinal) {
    int id = identity_seq++;
    std::string given = kWesternGiven[static_cast<std::size_t>(ordinal) % kWesternGivenSize];
    std::string middle = kMiddlePool[static_cast<std::size_t>(ordinal) % kMiddlePoolSize];
    std::string surname = surname_for(ordinal, "Monroe");
    if (spec.surname_pool > 0 && used.count(given + " " + middle + " " + surname))
      given = mutate_given(given, ordinal);
    auto accepted = accept(id, {given + " " + middle + " " + surname,
                                given + " " + middle.substr(0, 1) + ". " + surname,
                                given.substr(0, 1) + ". " + surname});
    finish_identity(id, accepted);
  }

  void emit_diacritic(int ordinal) {
    int id = identity_seq++;
    const auto& g = kDiacriticGiven[static_cast<std::size_t>(ordinal) % kDiacriticGivenSize];
    const auto& s =
        kDiacriticSurname[static_cast<std::size_t>(ordinal) % kDiacriticSurnameSize];
    std::string suffix =
        spec.surname_pool > 0 ? std::string() : std::to_string(ordinal);
    auto accepted = accept(id, {std::string(g.display) + " " + s.display + suffix,
                                std::string(g.ascii) + " " + s.ascii + suffix,
                                std::string(s.display) + suffix + ", " + g.display});
    finish_identity(id, accepted);
  }

  void emit_diminutive(int ordinal) {
    int id = identity_seq++;
    const auto& d = kDiminutive[static_cast<std::size_t>(ordinal) % kDiminutiveSize];
    std::string surname = surname_for(ordinal, "Whitfield");
    auto accepted = accept(id, {std::string(d.display) + " " + surname,
                                std::string(d.ascii) + " " + surname,
                                std::string(d.display).substr(0, 1) + ". " + surname});
    finish_identity(id, accepted);
  }

  void emit_pinyin_initial(int ordinal) {
    int id = identity_seq++;
    std::string given = kPinyinGiven[static_cast<std::size_t>(ordinal) % kPinyinGivenSize];
    std::string surname =
        spec.surname_pool > 0
            ? shared_surname()
            : std::string(kPinyinSurname[static_cast<std::size_t>(ordinal) %
                                         kPinyinSurnameSize]) +
                  std::to_string(ordinal);
    if (spec.surname_pool > 0 && used.count(given + " " + surname))
      given = mutate_given(given, ordinal);
    auto accepted = accept(id, {given + " " + surname, given.substr(0, 1) + ". " + surname});
    finish_identity(id, accepted);
  }

  // The split spelling shares no edge with the concatenated one; only the
  // shared co-author and the paper history can join them in stage 3.
  void emit_pinyin_split(int ordinal) {
    int id = identity_seq++;
    const auto& g = kPinyinSplit[static_cast<std::size_t>(ordinal) % kPinyinSplitSize];
    std::string surname =
        spec.surname_pool > 0
            ? shared_surname()
            : std::string(kPinyinSurname[static_cast<std::size_t>(ordinal) %
                                         kPinyinSurnameSize]) +
                  std::to_string(ordinal);
    std::string a = std::string(g.display) + " " + surname;
    std::string b = std::string(g.ascii) + " " + surname;
    auto accepted = accept(id, {a, b});
    if (accepted.size() == 2) {
      std::string helper = helper_raw(ordinal);
      pair_paper(accepted[0], helper);
      pair_paper(accepted[0], helper);
      pair_paper(accepted[1], helper);
      pair_paper(accepted[1], helper);
      true_pairs_among(accepted);
    } else {
      finish_identity(id, accepted);
    }
  }

  void emit_trap(int ordinal) {
    const AsciiPair* pair = nullptr;
    const char* surname_stem = nullptr;
    std::string surname_base;
    switch (ordinal % 3) {
      case 0:
        pair = &kPinyinTrap[static_cast<std::size_t>(ordinal) % kPinyinTrapSize];
        surname_stem = kPinyinSurname[static_cast<std::size_t>(ordinal) % kPinyinSurnameSize];
        break;
      case 1:
        pair = &kWesternTrap[static_cast<std::size_t>(ordinal) % kWesternTrapSize];
        surname_stem =
            kWesternSurname[static_cast<std::size_t>(ordinal) % kWesternSurnameSize];
        break;
      default:
        pair = &kShortTrap[static_cast<std::size_t>(ordinal) % kShortTrapSize];
        surname_stem = kPinyinSurname[static_cast<std::size_t>(ordinal) % kPinyinSurnameSize];
        break;
    }
    surname_base = spec.surname_pool > 0 ? shared_surname()
                                         : std::string(surname_stem) + std::to_string(ordinal);
    int id_a = identity_seq++;
    int id_b = identity_seq++;
    std::string raw_a = std::string(pair->display) + " " + surname_base;
    std::string raw_b = std::string(pair->ascii) + " " + surname_base;
    auto acc_a = accept(id_a, {raw_a});
    auto acc_b = accept(id_b, {raw_b});
    // two papers each with disjoint helpers: the pair becomes a stage-3
    // candidate that must be rejected on zero overlap
    if (!acc_a.empty()) {
      std::string helper = helper_raw(ordinal * 2);
      pair_paper(acc_a[0], helper);
      pair_paper(acc_a[0], helper);
    }
    if (!acc_b.empty()) {
      std::string helper = helper_raw(ordinal * 2 + 1);
      pair_paper(acc_b[0], helper);
      pair_paper(acc_b[0], helper);
    }
    if (!acc_a.empty() && !acc_b.empty()) {
      out.trap_pairs.push_back({acc_a[0], acc_b[0]});
      if (ordinal % 2 == 0 && pair->display[0] == pair->ascii[0]) {
        // ambiguous bare-initial probe; belongs to neither identity
        std::string probe =
            std::string(1, pair->display[0]) + ". " + surname_base;
        if (add_raw(probe, -1, false)) solo_paper(probe);
      }
    }
  }

  void emit_singleton(int ordinal) {
    int id = identity_seq++;
    std::string given = kWesternGiven[static_cast<std::size_t>(ordinal) % kWesternGivenSize];
    std::string surname = surname_for(ordinal, "Quimby");
    std::string raw = given + " " + surname;
    if (!add_raw(raw, id, true)) {
      raw = mutate_given(given, ordinal) + " " + surname;
      add_raw(raw, id, true);
    }
    solo_paper(raw);
  }

  Template pick_template() {
    double total = spec.share_initialism + spec.share_middle + spec.share_diacritic +
                   spec.share_diminutive + spec.share_pinyin_initial +
                   spec.share_pinyin_split + spec.share_trap;
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    double acc = spec.share_initialism;
    if (u < acc) return Template::kInitialism;
    if (u < (acc += spec.share_middle)) return Template::kMiddle;
    if (u < (acc += spec.share_diacritic)) return Template::kDiacritic;
    if (u < (acc += spec.share_diminutive)) return Template::kDiminutive;
    if (u < (acc += spec.share_pinyin_initial)) return Template::kPinyinInitial;
    if (u < (acc += spec.share_pinyin_split)) return Template::kPinyinSplit;
    return Template::kTrap;
  }

  void emit(Template t, int ordinal) {
    switch (t) {
      case Template::kInitialism: emit_initialism(ordinal); break;
      case Template::kMiddle: emit_middle(ordinal); break;
      case Template::kDiacritic: emit_diacritic(ordinal); break;
      case Template::kDiminutive: emit_diminutive(ordinal); break;
      case Template::kPinyinInitial: emit_pinyin_initial(ordinal); break;
      case Template::kPinyinSplit: emit_pinyin_split(ordinal); break;
      case Template::kTrap: emit_trap(ordinal); break;
      case Template::kSingleton: emit_singleton(ordinal); break;
    }
  }
};

}  // namespace

void NameCorpusSpec::validate() const {
  if (identities < 1 && target_raws < 1)
    throw ValidationError("name corpus spec: need identities or a raw-name target");
  if (surname_pool < 0) throw ValidationError("name corpus spec: surname pool must be >= 0");
  double total = share_initialism + share_middle + share_diacritic + share_diminutive +
                 share_pinyin_initial + share_pinyin_split + share_trap;
  if (!(total > 0.0)) throw ValidationError("name corpus spec: template shares sum to zero");
  for (double s : {share_initialism, share_middle, share_diacritic, share_diminutive,
                   share_pinyin_initial, share_pinyin_split, share_trap})
    if (s < 0.0) throw ValidationError("name corpus spec: template shares must be >= 0");
}

NameCorpus generate_name_corpus(const NameCorpusSpec& spec) {
  spec.validate();
  CorpusBuilder b(spec);
  int ordinal = 0;
  if (spec.target_raws > 0) {
    while (b.out.raw_count < static_cast<std::size_t>(spec.target_raws)) {
      auto remaining = static_cast<std::size_t>(spec.target_raws) - b.out.raw_count;
      // the widest template can add up to 8 raws (trap group with helpers)
      b.emit(remaining < 8 ? Template::kSingleton : b.pick_template(), ordinal);
      ++ordinal;
    }
  } else {
    int primaries = 0;
    while (primaries < spec.identities) {
      Template t = b.pick_template();
      if (t == Template::kTrap && primaries + 2 > spec.identities) t = Template::kInitialism;
      b.emit(t, ordinal);
      primaries += t == Template::kTrap ? 2 : 1;
      ++ordinal;
    }
  }
  b.out.identity_count = b.identity_seq;
  std::sort(b.out.raw_identity.begin(), b.out.raw_identity.end());
  return std::move(b.out);
}

namespace {

void write_ingest_inputs(const std::string& dir, const std::vector<PaperRecord>& records) {
  std::filesystem::create_directories(dir);
  std::string metadata;
  std::string assignments = "paper_id,topic_id,probability\n";
  for (const auto& rec : records) {
    PaperRecord bare = rec;
    bare.topic_id.reset();
    metadata += serialize_record(bare);
    metadata += "\n";
    if (rec.topic_id)
      assignments += csv::join_row({rec.paper_id, std::to_string(*rec.topic_id), "1.0"}) + "\n";
  }
  write_text_file(dir + "/metadata.jsonl", metadata);
  write_text_file(dir + "/assignments.csv", assignments);
}

}  // namespace

void write_corpus_files(const std::string& dir, const SyntheticCorpus& corpus) {
  write_ingest_inputs(dir, corpus.records);
  nlohmann::json truth;
  truth["topics"] = nlohmann::json::array();
  for (const auto& t : corpus.truth) {
    nlohmann::json entry;
    entry["topic_id"] = t.topic_id;
    entry["structure"] = t.structure;
    entry["groups"] = t.groups;
    truth["topics"].push_back(entry);
  }
  write_text_file(dir + "/ground_truth.json", truth.dump(2) + "\n");
}

void write_name_corpus_files(const std::string& dir, const NameCorpus& corpus) {
  write_ingest_inputs(dir, corpus.records);
  std::string gold = "raw_name,identity\n";
  for (const auto& [raw, id] : corpus.raw_identity)
    gold += csv::join_row({raw, std::to_string(id)}) + "\n";
  write_text_file(dir + "/gold_map.csv", gold);
  std::string pairs = "raw_a,raw_b\n";
  for (const auto& p : corpus.true_pairs) pairs += csv::join_row({p.a, p.b}) + "\n";
  write_text_file(dir + "/true_pairs.csv", pairs);
  std::string traps = "raw_a,raw_b\n";
  for (const auto& p : corpus.trap_pairs) traps += csv::join_row({p.a, p.b}) + "\n";
  write_text_file(dir + "/trap_pairs.csv", traps);
  nlohmann::json truth;
  truth["identities"] = corpus.identity_count;
  truth["raw_names"] = corpus.raw_count;
  truth["true_pairs"] = corpus.true_pairs.size();
  truth["trap_pairs"] = corpus.trap_pairs.size();
  write_text_file(dir + "/ground_truth.json", truth.dump(2) + "\n");
}

}  // namespace coanet::synth
