#pragma once

// Triangulations of rational polytopes given by point sets, barycentric subdivision,
// and lattice-normalized simplex volumes.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "weylot/double_description.hpp"

namespace weylot {

using Simplex = std::vector<RationalVector>;

/// Affine hull of a point set: base point plus an independent direction basis.
struct AffineFrame {
  RationalVector origin;
  std::vector<RationalVector> directions;

  explicit AffineFrame(const std::vector<RationalVector>& pts) : origin(pts.front()) {
    std::vector<RationalVector> echelon;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      RationalVector d = pts[i] - origin;
      auto candidate = echelon;
      candidate.push_back(d);
      if (rank(candidate) == candidate.size()) {
        echelon = std::move(candidate);
        directions.push_back(std::move(d));
      }
    }
  }

  std::size_t dimension() const { return directions.size(); }

  /// Coordinates of x in the direction basis, or nullopt when x is off the affine hull.
  std::optional<RationalVector> local(const RationalVector& x) const {
    if (directions.empty()) return x == origin ? std::optional<RationalVector>(RationalVector()) : std::nullopt;
    RationalMatrix cols(origin.size(), directions.size());
    for (std::size_t j = 0; j < directions.size(); ++j)
      for (std::size_t i = 0; i < origin.size(); ++i) cols(i, j) = directions[j][i];
    auto sol = solve(cols, x - origin);
    return sol;
  }
};

/// Index subsets of the relative facets of conv(pts) inside its affine hull.
inline std::vector<std::vector<std::size_t>> relative_facets(const std::vector<RationalVector>& pts) {
  AffineFrame frame(pts);
  if (frame.dimension() == 0) return {};
  std::vector<RationalVector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(*frame.local(p));
  std::vector<std::vector<std::size_t>> out;
  for (auto& f : detail::hull_facets(local)) out.push_back(std::move(f.points));
  return out;
}

/// Pulling triangulation of conv(pts): pull the lexicographically smallest point and
/// cone it over the recursively triangulated facets that avoid it.
inline std::vector<Simplex> pulling_triangulation(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (affine_dimension(pts) == 0) return {Simplex{pts.front()}};
  const RationalVector& apex = pts.front();
  std::vector<Simplex> out;
  for (const auto& facet : relative_facets(pts)) {
    if (std::find(facet.begin(), facet.end(), 0) != facet.end()) continue;
    std::vector<RationalVector> sub;
    for (auto i : facet) sub.push_back(pts[i]);
    for (auto& s : pulling_triangulation(std::move(sub))) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Barycentric coordinates of x with respect to a simplex, if x is in its affine hull.
inline std::optional<std::vector<Rational>> barycentric_coordinates(const Simplex& s,
                                                                    const RationalVector& x) {
  const std::size_t k = s.size() - 1;
  if (k == 0) return x == s[0] ? std::optional<std::vector<Rational>>({Rational(1)}) : std::nullopt;
  RationalMatrix cols(x.size(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < x.size(); ++i) cols(i, j) = s[j + 1][i] - s[0][i];
  auto mu = solve(cols, x - s[0]);
  if (!mu) return std::nullopt;
  std::vector<Rational> lambda(k + 1);
  lambda[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    lambda[j + 1] = (*mu)[j];
    lambda[0] -= (*mu)[j];
  }
  return lambda;
}

/// Stellar subdivision at x: every simplex containing x is coned from x over the
/// faces of it that avoid x. Simplices not containing x are kept.
inline std::vector<Simplex> stellar_insert(const std::vector<Simplex>& tri, const RationalVector& x) {
  std::vector<Simplex> out;
  for (const auto& s : tri) {
    auto lambda = barycentric_coordinates(s, x);
    bool inside = lambda && std::all_of(lambda->begin(), lambda->end(),
                                        [](const Rational& l) { return l >= 0; });
    bool is_vertex = inside && std::any_of(lambda->begin(), lambda->end(),
                                           [](const Rational& l) { return l == 1; });
    if (!inside || is_vertex) {
      out.push_back(s);
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((*lambda)[i] == 0) continue;
      Simplex t = s;
      t[i] = x;
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline RationalVector centroid(const std::vector<RationalVector>& pts) {
  RationalVector c(pts.front().size());
  for (const auto& p : pts) c += p;
  c *= Rational(1, static_cast<long>(pts.size()));
  return c;
}

/// One round of barycentric subdivision: (k+1)! simplices of equal volume.
inline std::vector<Simplex> barycentric_subdivision(const Simplex& s) {
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Simplex> out;
  do {
    Simplex cell;
    std::vector<RationalVector> prefix;
    for (auto i : perm) {
      prefix.push_back(s[i]);
      cell.push_back(centroid(prefix));
    }
    out.push_back(std::move(cell));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Volume of a k-simplex measured in the lattice `basis` (a Z-basis of the saturated
/// direction lattice of its affine span); a unimodular k-simplex has volume 1/k!.
inline Rational lattice_simplex_volume(const Simplex& s, const std::vector<RationalVector>& basis) {
  const std::size_t k = s.size() - 1;
  if (k == 0) return 1;
  RationalMatrix cols(s[0].size(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < s[0].size(); ++i) cols(i, j) = basis[j][i];
  RationalMatrix coeffs(k, k);
  for (std::size_t e = 0; e < k; ++e) {
    auto c = solve(cols, s[e + 1] - s[0]);
    for (std::size_t j = 0; j < k; ++j) coeffs(j, e) = (*c)[j];
  }
  return abs(determinant(coeffs)) / factorial(static_cast<unsigned>(k));
}

/// Z-basis of the direction lattice of the affine span of pts.
inline std::vector<RationalVector> direction_lattice(const std::vector<RationalVector>& pts) {
  std::vector<RationalVector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
  return saturated_lattice_basis(dirs, pts.front().size());
}

}  // namespace weylot
