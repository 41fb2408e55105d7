#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

namespace urbanreach::detail {

// Fixed-decimal formatting; "-0.000" collapses to "0.000" so output never
// depends on the sign of a rounded-away epsilon.
inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s(buf);
  bool negative_zero = s.size() > 1 && s[0] == '-';
  for (std::size_t i = 1; negative_zero && i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '.') negative_zero = false;
  }
  if (negative_zero) s.erase(0, 1);
  return s;
}

// Shortest representation that round-trips exactly.
inline std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace urbanreach::detail
