#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace bibcount {

// Round half-up to two decimals. All internal arithmetic stays at full
// precision; this is applied only when values are displayed or when a
// table convention explicitly calls for rounded inputs.
inline double round2(double x) {
  if (x >= 0.0) return std::floor(x * 100.0 + 0.5) / 100.0;
  return -std::floor(-x * 100.0 + 0.5) / 100.0;
}

inline std::string fmt2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", round2(x));
  return buf;
}

}  // namespace bibcount
