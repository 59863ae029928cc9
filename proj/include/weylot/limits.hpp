#pragma once

#include <cstdlib>
#include <string>

namespace weylot {

inline constexpr std::size_t kDefaultOrbitCap = 100000;

/// Cap on orbit and group sizes; `WEYLOT_ORBIT_CAP` overrides the default.
inline std::size_t orbit_cap() {
  if (const char* env = std::getenv("WEYLOT_ORBIT_CAP")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return kDefaultOrbitCap;
}

}  // namespace weylot
