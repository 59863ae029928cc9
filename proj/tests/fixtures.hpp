#pragma once

// Polytopes used across the test suites, written out in explicit coordinates.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "weylot/polytope.hpp"

namespace weylot::testing {

inline RationalVector vec(std::initializer_list<std::int64_t> xs) {
  return RationalVector::from_ints(std::vector<std::int64_t>(xs));
}

inline std::vector<RationalVector> points(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(vec(r));
  return out;
}

inline Polytope hull(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  auto pts = points(rows);
  const std::size_t d = pts.front().size();
  return convex_hull(std::move(pts), d);
}

inline Polytope segment() { return hull({{-1}, {1}}); }
inline Polytope square() { return hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }
inline Polytope diamond() { return hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }
inline Polytope hexagon() { return hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}); }
inline Polytope small_triangle() { return hull({{1, 0}, {0, 1}, {-1, -1}}); }
inline Polytope p2_triangle() { return hull({{-1, -1}, {2, -1}, {-1, 2}}); }
inline Polytope octagon() {
  return hull({{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}});
}
inline Polytope cube() {
  return hull({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
               {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
}
inline Polytope octahedron() {
  return hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

}  // namespace weylot::testing
