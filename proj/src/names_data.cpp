#include <cstddef>

namespace coanet::names {

// Standard Mandarin romanization syllable inventory, toneless.
extern const char* const kPinyinSyllables[];
const char* const kPinyinSyllables[] = {
    "a", "ai", "an", "ang", "ao",
    "ba", "bai", "ban", "bang", "bao", "bei", "ben", "beng", "bi", "bian", "biao",
    "bie", "bin", "bing", "bo", "bu",
    "ca", "cai", "can", "cang", "cao", "ce", "cen", "ceng", "cha", "chai", "chan",
    "chang", "chao", "che", "chen", "cheng", "chi", "chong", "chou", "chu", "chua",
    "chuai", "chuan", "chuang", "chui", "chun", "chuo", "ci", "cong", "cou", "cu",
    "cuan", "cui", "cun", "cuo",
    "da", "dai", "dan", "dang", "dao", "de", "dei", "den", "deng", "di", "dia",
    "dian", "diao", "die", "ding", "diu", "dong", "dou", "du", "duan", "dui", "dun",
    "duo",
    "e", "ei", "en", "eng", "er",
    "fa", "fan", "fang", "fei", "fen", "feng", "fo", "fou", "fu",
    "ga", "gai", "gan", "gang", "gao", "ge", "gei", "gen", "geng", "gong", "gou",
    "gu", "gua", "guai", "guan", "guang", "gui", "gun", "guo",
    "ha", "hai", "han", "hang", "hao", "he", "hei", "hen", "heng", "hong", "hou",
    "hu", "hua", "huai", "huan", "huang", "hui", "hun", "huo",
    "ji", "jia", "jian", "jiang", "jiao", "jie", "jin", "jing", "jiong", "jiu",
    "ju", "juan", "jue", "jun",
    "ka", "kai", "kan", "kang", "kao", "ke", "kei", "ken", "keng", "kong", "kou",
    "ku", "kua", "kuai", "kuan", "kuang", "kui", "kun", "kuo",
    "la", "lai", "lan", "lang", "lao", "le", "lei", "leng", "li", "lia", "lian",
    "liang", "liao", "lie", "lin", "ling", "liu", "lo", "long", "lou", "lu", "luan",
    "lun", "luo", "lv", "lue", "lve",
    "ma", "mai", "man", "mang", "mao", "me", "mei", "men", "meng", "mi", "mian",
    "miao", "mie", "min", "ming", "miu", "mo", "mou", "mu",
    "na", "nai", "nan", "nang", "nao", "ne", "nei", "nen", "neng", "ni", "nian",
    "niang", "niao", "nie", "nin", "ning", "niu", "nong", "nou", "nu", "nuan",
    "nuo", "nv", "nue", "nve",
    "o", "ou",
    "pa", "pai", "pan", "pang", "pao", "pei", "pen", "peng", "pi", "pian", "piao",
    "pie", "pin", "ping", "po", "pou", "pu",
    "qi", "qia", "qian", "qiang", "qiao", "qie", "qin", "qing", "qiong", "qiu",
    "qu", "quan", "que", "qun",
    "ran", "rang", "rao", "re", "ren", "reng", "ri", "rong", "rou", "ru", "rua",
    "ruan", "rui", "run", "ruo",
    "sa", "sai", "san", "sang", "sao", "se", "sen", "seng", "sha", "shai", "shan",
    "shang", "shao", "she", "shei", "shen", "sheng", "shi", "shou", "shu", "shua",
    "shuai", "shuan", "shuang", "shui", "shun", "shuo", "si", "song", "sou", "su",
    "suan", "sui", "sun", "suo",
    "ta", "tai", "tan", "tang", "tao", "te", "teng", "ti", "tian", "tiao", "tie",
    "ting", "tong", "tou", "tu", "tuan", "tui", "tun", "tuo",
    "wa", "wai", "wan", "wang", "wei", "wen", "weng", "wo", "wu",
    "xi", "xia", "xian", "xiang", "xiao", "xie", "xin", "xing", "xiong", "xiu",
    "xu", "xuan", "xue", "xun",
    "ya", "yan", "yang", "yao", "ye", "yi", "yin", "ying", "yo", "yong", "you",
    "yu", "yuan", "yue", "yun",
    "za", "zai", "zan", "zang", "zao", "ze", "zei", "zen", "zeng", "zha", "zhai",
    "zhan", "zhang", "zhao", "zhe", "zhei", "zhen", "zheng", "zhi", "zhong",
    "zhou", "zhu", "zhua", "zhuai", "zhuan", "zhuang", "zhui", "zhun", "zhuo",
    "zi", "zong", "zou", "zu", "zuan", "zui", "zun", "zuo",
};
extern const std::size_t kPinyinSyllableCount;
const std::size_t kPinyinSyllableCount = sizeof(kPinyinSyllables) / sizeof(kPinyinSyllables[0]);

// English given-name diminutives; symmetric lookup, no transitive closure.
extern const char* const kDiminutivePairs[][2];
const char* const kDiminutivePairs[][2] = {
    {"abigail", "abby"},      {"albert", "al"},         {"albert", "bert"},
    {"alexander", "alex"},    {"alexander", "sasha"},   {"alexandra", "alex"},
    {"alexandra", "sandra"},  {"andrew", "andy"},       {"andrew", "drew"},
    {"anthony", "tony"},      {"arthur", "art"},        {"barbara", "barb"},
    {"benjamin", "ben"},      {"bernard", "bernie"},    {"catherine", "cathy"},
    {"catherine", "kate"},    {"charles", "charlie"},   {"charles", "chuck"},
    {"christopher", "chris"}, {"christopher", "kit"},   {"daniel", "dan"},
    {"daniel", "danny"},      {"david", "dave"},        {"deborah", "deb"},
    {"deborah", "debbie"},    {"dennis", "denny"},      {"donald", "don"},
    {"dorothy", "dot"},       {"douglas", "doug"},      {"edward", "ed"},
    {"edward", "eddie"},      {"edward", "ned"},        {"edward", "ted"},
    {"elizabeth", "beth"},    {"elizabeth", "betty"},   {"elizabeth", "eliza"},
    {"elizabeth", "liz"},     {"elizabeth", "lizzie"},  {"ernest", "ernie"},
    {"eugene", "gene"},       {"florence", "flo"},      {"frances", "fran"},
    {"francis", "frank"},     {"frederick", "fred"},    {"gerald", "jerry"},
    {"gregory", "greg"},      {"harold", "harry"},      {"henry", "hank"},
    {"henry", "harry"},       {"herbert", "herb"},      {"jacqueline", "jackie"},
    {"james", "jamie"},       {"james", "jim"},         {"james", "jimmy"},
    {"janet", "jan"},         {"jennifer", "jen"},      {"jennifer", "jenny"},
    {"jeremy", "jerry"},      {"jessica", "jess"},      {"john", "jack"},
    {"john", "johnny"},       {"jonathan", "jon"},      {"joseph", "joe"},
    {"joseph", "joey"},       {"joshua", "josh"},       {"judith", "judy"},
    {"katherine", "kate"},    {"katherine", "kathy"},   {"katherine", "katie"},
    {"kenneth", "ken"},       {"kenneth", "kenny"},     {"kimberly", "kim"},
    {"lawrence", "larry"},    {"leonard", "lenny"},     {"leonard", "leo"},
    {"leslie", "les"},        {"louis", "lou"},         {"margaret", "maggie"},
    {"margaret", "meg"},      {"margaret", "peggy"},    {"martin", "marty"},
    {"matthew", "matt"},      {"maximilian", "max"},    {"maxwell", "max"},
    {"melissa", "mel"},       {"michael", "mike"},      {"michael", "mikey"},
    {"nancy", "nan"},         {"nathaniel", "nate"},    {"nathaniel", "nathan"},
    {"nicholas", "nick"},     {"norman", "norm"},       {"pamela", "pam"},
    {"patricia", "pat"},      {"patricia", "trish"},    {"patrick", "pat"},
    {"peter", "pete"},        {"philip", "phil"},       {"phillip", "phil"},
    {"raymond", "ray"},       {"rebecca", "becca"},     {"rebecca", "becky"},
    {"richard", "dick"},      {"richard", "richie"},    {"richard", "rick"},
    {"richard", "ricky"},     {"robert", "bob"},        {"robert", "bobby"},
    {"robert", "rob"},        {"robert", "robbie"},     {"ronald", "ron"},
    {"russell", "russ"},      {"samuel", "sam"},        {"sandra", "sandy"},
    {"stanley", "stan"},      {"stephanie", "steph"},   {"stephen", "steve"},
    {"steven", "steve"},      {"susan", "sue"},         {"susan", "susie"},
    {"suzanne", "sue"},       {"theodore", "ted"},      {"theodore", "theo"},
    {"thomas", "tom"},        {"thomas", "tommy"},      {"timothy", "tim"},
    {"valerie", "val"},       {"veronica", "ronnie"},   {"victoria", "vicky"},
    {"vincent", "vince"},     {"virginia", "ginny"},    {"walter", "walt"},
    {"william", "bill"},      {"william", "billy"},     {"william", "liam"},
    {"william", "will"},      {"zachary", "zach"},
};
extern const std::size_t kDiminutivePairCount;
const std::size_t kDiminutivePairCount = sizeof(kDiminutivePairs) / sizeof(kDiminutivePairs[0]);

}  // namespace coanet::names
