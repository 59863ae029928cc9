#pragma once

// Double description method (Motzkin) over the integers, used for facet enumeration
// of point sets and vertex enumeration of bounded H-polyhedra.

#include <bit>
#include <cstdint>
#include <vector>

#include "weylot/matrix.hpp"

namespace weylot::detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_superset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & words_[i]) != 0) return true;
    return false;
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset c = a;
    for (std::size_t i = 0; i < c.words_.size(); ++i) c.words_[i] &= b.words_[i];
    return c;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) = default;

 private:
  std::vector<std::uint64_t> words_;
};

using IntVec = std::vector<Integer>;

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
}

struct Ray {
  IntVec coords;
  Bitset zeros;  // indices of processed constraints tight at this ray
};

/// Extreme rays of the pointed cone {z : <a_i, z> <= 0 for all i}.
/// `full_dimensional` enables the cheap adjacency filter |Z(p) ∩ Z(q)| >= n - 2.
inline std::vector<Ray> extreme_rays(const std::vector<IntVec>& constraints, std::size_t n,
                                     bool full_dimensional) {
  const std::size_t m = constraints.size();

  // Pick n independent constraints for the initial simplicial cone.
  std::vector<std::size_t> basis;
  {
    std::vector<RationalVector> echelon;
    for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
      auto candidate = echelon;
      candidate.push_back(to_rational(constraints[i]));
      if (rank(candidate) == candidate.size()) {
        echelon = std::move(candidate);
        basis.push_back(i);
      }
    }
    if (basis.size() < n) throw Error(ErrorCode::InvalidArgument, "cone is not pointed");
  }

  RationalMatrix a0(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a0(r, c) = Rational(constraints[basis[r]][c]);
  auto inv = inverse(a0);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = -(*inv)(i, j);
    Ray r{primitive_integer(col).first, Bitset(m)};
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) r.zeros.set(basis[k]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (auto b : basis) processed[b] = true;

  for (std::size_t ci = 0; ci < m; ++ci) {
    if (processed[ci]) continue;
    processed[ci] = true;
    const IntVec& a = constraints[ci];

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].coords);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
    }
    if (pos.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zeros.set(ci);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (full_dimensional && common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (rays[r].zeros.is_superset_of(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = val[p] * rays[q].coords[i] - val[q] * rays[p].coords[i];
        make_primitive(z);
        common.set(ci);
        next.push_back(Ray{std::move(z), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] > 0) continue;
      if (val[r] == 0) rays[r].zeros.set(ci);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }
  return rays;
}

/// A facet hyperplane {x : <normal, x> = offset} of the hull of a point set, with
/// normal a primitive integer vector and the hull on the side <normal, x> <= offset.
struct HullFacet {
  RationalVector normal;
  Rational offset;
  std::vector<std::size_t> points;  // indices of input points on the facet
};

/// Facets of conv(points), which must be full-dimensional in R^n.
inline std::vector<HullFacet> hull_facets(const std::vector<RationalVector>& points) {
  const std::size_t n = points.front().size();
  RationalVector center(n);
  for (const auto& p : points) center += p;
  center *= Rational(1, static_cast<long>(points.size()));

  Integer scale = 1;
  for (const auto& p : points) scale = lcm(scale, (p - center).common_denominator());

  std::vector<IntVec> constraints;
  constraints.reserve(points.size());
  for (const auto& p : points) {
    RationalVector q = p - center;
    IntVec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = numerator_of(q[i] * scale);
    row[n] = -1;
    constraints.push_back(std::move(row));
  }

  std::vector<HullFacet> facets;
  for (auto& ray : extreme_rays(constraints, n + 1, true)) {
    RationalVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rational(ray.coords[i]);
    auto [normal, s] = primitive_integer(y);
    RationalVector nv = to_rational(normal);
    // <L(x - c), y> <= t  <=>  <x, y/s> <= t/(L s) + <c, y/s>
    Rational offset = Rational(ray.coords[n]) * s / Rational(scale) + bracket(center, nv);
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (ray.zeros.test(i)) on.push_back(i);
    facets.push_back(HullFacet{std::move(nv), offset, std::move(on)});
  }
  return facets;
}

/// Vertices of the bounded polyhedron {x : <a_i, x> <= b_i, <e_j, x> = f_j}.
/// Returns an empty list when the polyhedron is empty.
inline std::vector<RationalVector> polyhedron_vertices(const std::vector<RationalVector>& a,
                                                       const std::vector<Rational>& b,
                                                       const std::vector<RationalVector>& eq = {},
                                                       const std::vector<Rational>& f = {}) {
  const std::size_t n = a.empty() ? eq.front().size() : a.front().size();
  std::vector<IntVec> rows;
  auto push = [&](const RationalVector& lhs, const Rational& rhs, int sign) {
    RationalVector h(n + 1);
    for (std::size_t i = 0; i < n; ++i) h[i] = sign * lhs[i];
    h[n] = -sign * rhs;
    rows.push_back(primitive_integer(h).first);
  };
  for (std::size_t i = 0; i < a.size(); ++i) push(a[i], b[i], 1);
  for (std::size_t j = 0; j < eq.size(); ++j) {
    push(eq[j], f[j], 1);
    push(eq[j], f[j], -1);
  }
  IntVec s_nonneg(n + 1, 0);
  s_nonneg[n] = -1;
  rows.push_back(s_nonneg);

  std::vector<RationalVector> out;
  for (auto& ray : extreme_rays(rows, n + 1, false)) {
    if (ray.coords[n] <= 0) continue;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational(ray.coords[i], ray.coords[n]);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace weylot::detail
