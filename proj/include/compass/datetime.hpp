#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace compass {

/// A calendar instant with millisecond precision and no time zone.
struct DateTime {
  std::int64_t millis = 0;  // since 1970-01-01T00:00:00.000

  auto operator<=>(const DateTime&) const = default;
};

// The timestamp pattern used by the service-event data and the bundled queries.
inline constexpr std::string_view kTimestampPattern = "yyyy-MM-dd'T'HH:mm:ss.SSS";

// Parses `lexical` against a SimpleDateFormat-style pattern. Supported
// fields: yyyy MM dd HH mm ss SSS, quoted literals ('T', ''), and verbatim
// punctuation. Throws Error(UnparseableDate) on mismatch or an invalid
// calendar date.
DateTime parse_date(std::string_view lexical, std::string_view pattern = kTimestampPattern);

std::optional<DateTime> try_parse_date(std::string_view lexical,
                                       std::string_view pattern = kTimestampPattern);

std::string format_date(DateTime t, std::string_view pattern = kTimestampPattern);

// floor((end - begin) / 7 days); negative when end precedes begin.
std::int64_t weeks_between(DateTime end, DateTime begin);

DateTime add_days(DateTime t, std::int64_t days);

}  // namespace compass
