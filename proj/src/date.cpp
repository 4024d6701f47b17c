#include "coanet/date.hpp"

#include <cctype>
#include <cstdio>

namespace coanet {

namespace {

bool all_digits(const std::string& s, std::size_t b, std::size_t e) {
  if (b >= e || e > s.size()) return false;
  for (std::size_t i = b; i < e; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

int days_in_month(int year, int month) {
  static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2) {
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return days[month - 1];
}

}  // namespace

std::optional<Date> parse_date(const std::string& s) {
  Date d;
  if (s.size() == 10 && s[4] == '-' && s[7] == '-' && all_digits(s, 0, 4) &&
      all_digits(s, 5, 7) && all_digits(s, 8, 10)) {
    d.year = std::stoi(s.substr(0, 4));
    d.month = std::stoi(s.substr(5, 2));
    d.day = std::stoi(s.substr(8, 2));
  } else if (s.size() == 7 && s[4] == '-' && all_digits(s, 0, 4) && all_digits(s, 5, 7)) {
    d.year = std::stoi(s.substr(0, 4));
    d.month = std::stoi(s.substr(5, 2));
    d.day = 1;
  } else {
    return std::nullopt;
  }
  if (d.month < 1 || d.month > 12) return std::nullopt;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
  return d;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace coanet
