#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emoscan {

std::string to_lower_ascii(std::string_view s);

// True when every byte is plain 7-bit ASCII.
bool is_ascii(std::string_view s);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
std::optional<double> parse_double(std::string_view s);

// Split keeping empty fields (TSV-style).
std::vector<std::string_view> split(std::string_view s, char delim);

std::string_view trim(std::string_view s);

// "YYYY-MM-DDThh:mm:ssZ" <-> seconds since the Unix epoch (UTC only).
std::optional<std::int64_t> parse_iso8601(std::string_view s);
std::string format_iso8601(std::int64_t epoch_seconds);

}  // namespace emoscan
