#include "compass/datetime.hpp"

#include <cctype>
#include <chrono>
#include <vector>

#include "compass/error.hpp"

namespace compass {

namespace {

constexpr std::int64_t kMillisPerDay = 86'400'000;

struct Field {
  char letter = 0;  // 0 for a literal run
  std::size_t width = 0;
  std::string literal;
};

std::vector<Field> compile(std::string_view pattern) {
  std::vector<Field> fields;
  for (std::size_t i = 0; i < pattern.size();) {
    char c = pattern[i];
    if (c == '\'') {
      std::size_t j = i + 1;
      std::string lit;
      if (j < pattern.size() && pattern[j] == '\'') {
        lit = "'";
        j += 1;
      } else {
        for (;;) {
          while (j < pattern.size() && pattern[j] != '\'') lit += pattern[j++];
          if (j >= pattern.size()) throw Error(Errc::UnparseableDate, "unterminated quote in pattern");
          ++j;
          // '' inside quoted text is a literal quote
          if (j < pattern.size() && pattern[j] == '\'') {
            lit += '\'';
            ++j;
            continue;
          }
          break;
        }
      }
      fields.push_back({0, 0, lit});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < pattern.size() && pattern[j] == c) ++j;
      if (std::string_view("yMdHmsS").find(c) == std::string_view::npos) {
        throw Error(Errc::UnparseableDate, std::string("unsupported pattern letter '") + c + "'");
      }
      fields.push_back({c, j - i, {}});
      i = j;
    } else {
      fields.push_back({0, 0, std::string(1, c)});
      ++i;
    }
  }
  return fields;
}

[[noreturn]] void bad(std::string_view lexical, std::string_view why) {
  throw Error(Errc::UnparseableDate,
              "cannot parse date '" + std::string(lexical) + "': " + std::string(why));
}

}  // namespace

DateTime parse_date(std::string_view lexical, std::string_view pattern) {
  int year = 1970;
  unsigned month = 1, day = 1;
  int hour = 0, minute = 0, second = 0, milli = 0;

  std::size_t pos = 0;
  for (const auto& f : compile(pattern)) {
    if (f.letter == 0) {
      if (lexical.substr(pos, f.literal.size()) != f.literal) bad(lexical, "literal mismatch");
      pos += f.literal.size();
      continue;
    }
    if (pos + f.width > lexical.size()) bad(lexical, "too short");
    int value = 0;
    for (std::size_t k = 0; k < f.width; ++k) {
      char d = lexical[pos + k];
      if (!std::isdigit(static_cast<unsigned char>(d))) bad(lexical, "expected digit");
      value = value * 10 + (d - '0');
    }
    pos += f.width;
    switch (f.letter) {
      case 'y': year = value; break;
      case 'M': month = static_cast<unsigned>(value); break;
      case 'd': day = static_cast<unsigned>(value); break;
      case 'H': hour = value; break;
      case 'm': minute = value; break;
      case 's': second = value; break;
      case 'S': milli = value; break;
    }
  }
  if (pos != lexical.size()) bad(lexical, "trailing characters");

  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) bad(lexical, "invalid calendar date");
  if (hour > 23 || minute > 59 || second > 59 || milli > 999) bad(lexical, "invalid time of day");

  std::int64_t days_since_epoch = sys_days{ymd}.time_since_epoch().count();
  return DateTime{days_since_epoch * kMillisPerDay +
                  ((hour * 60 + minute) * 60 + second) * std::int64_t{1000} + milli};
}

std::optional<DateTime> try_parse_date(std::string_view lexical, std::string_view pattern) {
  try {
    return parse_date(lexical, pattern);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string format_date(DateTime t, std::string_view pattern) {
  using namespace std::chrono;
  std::int64_t day_index = t.millis >= 0 ? t.millis / kMillisPerDay
                                         : -((-t.millis + kMillisPerDay - 1) / kMillisPerDay);
  std::int64_t in_day = t.millis - day_index * kMillisPerDay;
  year_month_day ymd{sys_days{days{day_index}}};

  auto pad = [](std::int64_t v, std::size_t width) {
    std::string s = std::to_string(v);
    while (s.size() < width) s.insert(s.begin(), '0');
    return s;
  };

  std::string out;
  for (const auto& f : compile(pattern)) {
    switch (f.letter) {
      case 0: out += f.literal; break;
      case 'y': out += pad(static_cast<int>(ymd.year()), f.width); break;
      case 'M': out += pad(static_cast<unsigned>(ymd.month()), f.width); break;
      case 'd': out += pad(static_cast<unsigned>(ymd.day()), f.width); break;
      case 'H': out += pad(in_day / 3'600'000, f.width); break;
      case 'm': out += pad(in_day / 60'000 % 60, f.width); break;
      case 's': out += pad(in_day / 1000 % 60, f.width); break;
      case 'S': out += pad(in_day % 1000, f.width); break;
    }
  }
  return out;
}

std::int64_t weeks_between(DateTime end, DateTime begin) {
  constexpr std::int64_t week = 7 * kMillisPerDay;
  std::int64_t span = end.millis - begin.millis;
  std::int64_t q = span / week;
  if (span % week != 0 && span < 0) --q;
  return q;
}

DateTime add_days(DateTime t, std::int64_t days) { return DateTime{t.millis + days * kMillisPerDay}; }

}  // namespace compass
