#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wigmore {

/// Time is always injected; domain logic never reads a wall clock.
using Timestamp = std::chrono::sys_seconds;

inline Timestamp from_seconds(std::int64_t s) { return Timestamp{std::chrono::seconds{s}}; }
inline std::int64_t to_seconds(Timestamp t) { return t.time_since_epoch().count(); }

/// Parses "90", "90s", "15m", "6h", "1d" and combinations such as "9h30m".
std::optional<std::chrono::seconds> parse_duration(std::string_view text);

/// "2019-03-04T08:00:00Z". Only the UTC "Z" form is accepted.
std::string format_timestamp(Timestamp t);
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Compact rendering used in timelines: "0h", "9h", "9h30m", "45s".
std::string format_duration(std::chrono::seconds d);

}  // namespace wigmore
