#pragma once

#include <cstdio>
#include <string>

namespace zonet::io {

/// Shortest-round-trip-safe decimal rendering used by every text exporter.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);  // no "-0.000000"
  return s;
}

}  // namespace zonet::io
