#pragma once

#include <compare>
#include <optional>
#include <string>

namespace coanet {

// Calendar date. Month-precision inputs resolve to the first of the month.
struct Date {
  int year = 0;
  int month = 1;
  int day = 1;
  auto operator<=>(const Date&) const = default;
};

// Accepts YYYY-MM-DD and YYYY-MM. Returns nullopt for anything else,
// including out-of-range components (leap years handled).
std::optional<Date> parse_date(const std::string& s);

std::string format_date(const Date& d);

}  // namespace coanet
