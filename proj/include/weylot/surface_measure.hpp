#pragma once

// Integral surface measures on the boundary of a polytope and their discretizations.

#include <map>
#include <optional>
#include <unordered_map>

#include "weylot/polytope.hpp"
#include "weylot/root_system.hpp"

namespace weylot {

struct SurfaceMeasure {
  std::vector<Rational> facet_masses;  // indexed like Polytope::facets()
  Rational total = 0;
};

/// Lattice-normalized (d-1)-volume of every facet.
inline SurfaceMeasure surface_measure(const Polytope& p) {
  SurfaceMeasure s;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    s.facet_masses.push_back(facet_volume(p, f));
    s.total += s.facet_masses.back();
  }
  return s;
}

inline constexpr std::size_t kNoChamber = static_cast<std::size_t>(-1);

/// Probability measure on finitely many boundary points.
struct WeightedPointCloud {
  std::vector<RationalVector> points;
  std::vector<Rational> masses;
  std::vector<std::size_t> facets;    // facet of the polytope holding each point
  std::vector<std::size_t> chambers;  // group element index whose chamber holds the point, or kNoChamber

  std::size_t size() const { return points.size(); }

  Rational total() const {
    Rational t = 0;
    for (const auto& m : masses) t += m;
    return t;
  }
};

/// A finite reflection group acting on one side, with its closed fundamental chamber
/// {x : <x, wall> >= 0 for every wall}.
struct ChamberGroup {
  std::vector<UnimodularMap> elements;
  std::vector<RationalVector> walls;
};

inline ChamberGroup chamber_group(const RootSystem& r, const WeylGroup& w, Side side) {
  ChamberGroup g;
  g.elements = side == Side::M ? w.elements : w.dual;
  for (std::size_t i = 0; i < r.rank(); ++i)
    g.walls.push_back(side == Side::M ? r.simple_coroot(i) : r.simple_root(i));
  return g;
}

inline ChamberGroup chamber_group(const RootSystem& r, Side side) { return chamber_group(r, r.weyl_group(), side); }

namespace detail {

inline constexpr std::size_t kLatticePointBudget = 10'000'000;

/// Lattice points of a facet, by scanning the bounding box of its vertices.
inline std::vector<RationalVector> facet_lattice_points(const Polytope& p, std::size_t f) {
  auto vs = p.facet_points(f);
  const std::size_t d = p.dimension();
  std::vector<Integer> lo(d), hi(d);
  std::size_t box = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational a = vs[0][i], b = vs[0][i];
    for (const auto& v : vs) {
      a = std::min(a, v[i]);
      b = std::max(b, v[i]);
    }
    lo[i] = numerator_of(a) / denominator_of(a);
    if (Rational(lo[i]) < a) lo[i] += 1;
    hi[i] = numerator_of(b) / denominator_of(b);
    if (Rational(hi[i]) > b) hi[i] -= 1;
    if (hi[i] < lo[i]) return {};
    box *= static_cast<std::size_t>(to_int64(hi[i] - lo[i] + 1));
    if (box > kLatticePointBudget)
      throw Error(ErrorCode::CombinatorialBudgetExceeded, "facet bounding box too large for lattice point scan");
  }
  std::vector<RationalVector> out;
  RationalVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = Rational(lo[i]);
  const auto& facet = p.facets()[f];
  while (true) {
    if (bracket(x, facet.normal) == facet.offset && p.contains(x)) out.push_back(x);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (x[i] < Rational(hi[i])) {
        x[i] += 1;
        break;
      }
      x[i] = Rational(lo[i]);
    }
    if (i == d) break;
  }
  return out;
}

/// Pulling triangulation of the facet's lattice points, then stellar insertion of the
/// lattice points it missed, in lexicographic order.
inline std::vector<Simplex> lattice_triangulation(const Polytope& p, std::size_t f) {
  auto pts = facet_lattice_points(p, f);
  for (const auto& v : p.facet_points(f))
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  auto tri = pulling_triangulation(pts);
  std::set<RationalVector> used;
  for (const auto& s : tri) used.insert(s.begin(), s.end());
  for (const auto& x : pts)
    if (!used.count(x)) tri = stellar_insert(tri, x);
  return tri;
}

inline std::vector<Simplex> refine(std::vector<Simplex> cells, int k) {
  for (int r = 0; r < k; ++r) {
    std::vector<Simplex> next;
    for (const auto& s : cells)
      for (auto& t : barycentric_subdivision(s)) next.push_back(std::move(t));
    cells = std::move(next);
  }
  return cells;
}

inline void check_invariant(const Polytope& p, const ChamberGroup& g) {
  for (const auto& w : g.elements)
    for (const auto& v : p.vertices())
      if (!p.vertex_index(w.apply(v)))
        throw Error(ErrorCode::InvalidArgument, "polytope is not invariant under the group");
}

}  // namespace detail

/// Centroid quadrature of the normalized surface measure. Without a group every facet
/// is triangulated by lattice simplices; with a group only the pieces F ∩ C+ are
/// triangulated and the cells are transported by every group element, so the cloud is
/// invariant. Each triangle is barycentrically subdivided k times.
inline WeightedPointCloud discretize(const Polytope& p, int k, const std::optional<ChamberGroup>& group = std::nullopt) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "refinement must be nonnegative");
  struct Cell {
    RationalVector point;
    Rational volume;
    std::size_t facet;
    std::size_t chamber;
  };
  if (group) detail::check_invariant(p, *group);
  std::vector<Cell> cells;
  std::map<RationalVector, std::size_t> facet_by_normal;
  for (std::size_t f = 0; f < p.facets().size(); ++f) facet_by_normal.emplace(p.facets()[f].normal, f);

  const std::size_t d = p.dimension();
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    auto basis = direction_lattice(p.facet_points(f));
    std::vector<Simplex> tri;
    if (!group) {
      tri = detail::lattice_triangulation(p, f);
    } else {
      std::vector<RationalVector> a;
      std::vector<Rational> b;
      for (const auto& g : p.facets()) {
        a.push_back(g.normal);
        b.push_back(g.offset);
      }
      for (const auto& w : group->walls) {
        a.push_back(-w);
        b.push_back(0);
      }
      auto piece = detail::polyhedron_vertices(a, b, {p.facets()[f].normal}, {p.facets()[f].offset});
      if (piece.empty() || affine_dimension(piece) + 1 < static_cast<int>(d)) continue;
      tri = pulling_triangulation(piece);
    }
    for (const auto& s : detail::refine(std::move(tri), k)) {
      std::vector<RationalVector> pts(s.begin(), s.end());
      cells.push_back({centroid(pts), lattice_simplex_volume(s, basis), f, group ? 0 : kNoChamber});
    }
  }

  if (group) {
    std::vector<Cell> all;
    all.reserve(cells.size() * group->elements.size());
    for (std::size_t w = 0; w < group->elements.size(); ++w) {
      const auto& g = group->elements[w];
      const UnimodularMap dual = g.inverse().transpose();
      for (const auto& c : cells) {
        auto f = facet_by_normal.at(dual.apply(p.facets()[c.facet].normal));
        all.push_back({g.apply(c.point), c.volume, f, w});
      }
    }
    cells = std::move(all);
  }

  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.point < y.point; });
  Rational total = 0;
  for (const auto& c : cells) total += c.volume;
  WeightedPointCloud cloud;
  for (auto& c : cells) {
    if (!cloud.points.empty() && cloud.points.back() == c.point) {
      cloud.masses.back() += c.volume / total;
      continue;
    }
    cloud.points.push_back(std::move(c.point));
    cloud.masses.push_back(c.volume / total);
    cloud.facets.push_back(c.facet);
    cloud.chambers.push_back(c.chamber);
  }
  return cloud;
}

/// Mass of each chamber w(C+), indexed like the Weyl group elements. A point on walls
/// is split equally among the chambers whose closure contains it.
inline std::vector<Rational> chamber_mass(const WeightedPointCloud& cloud, const RootSystem& r, const WeylGroup& w,
                                          Side side) {
  const auto& elements = side == Side::M ? w.elements : w.dual;
  std::unordered_map<UnimodularMap, std::size_t, UnimodularMapHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::map<std::vector<std::size_t>, std::vector<UnimodularMap>> stabilizers;

  std::vector<Rational> out(elements.size(), Rational(0));
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto dom = r.dominant_representative(cloud.points[i], side);
    std::vector<std::size_t> fixed;
    for (std::size_t j = 0; j < r.rank(); ++j) {
      Rational v = side == Side::M ? bracket(dom.point, r.simple_coroot(j)) : bracket(r.simple_root(j), dom.point);
      if (v == 0) fixed.push_back(j);
    }
    auto it = stabilizers.find(fixed);
    if (it == stabilizers.end()) {
      auto sub = r.parabolic_subgroup(fixed);
      it = stabilizers.emplace(fixed, side == Side::M ? sub.elements : sub.dual).first;
    }
    const UnimodularMap back = dom.map.inverse();
    const Rational share = cloud.masses[i] / Rational(static_cast<long>(it->second.size()));
    for (const auto& s : it->second) out[index.at(back * s)] += share;
  }
  return out;
}

inline std::vector<Rational> chamber_mass(const WeightedPointCloud& cloud, const RootSystem& r, Side side) {
  return chamber_mass(cloud, r, r.weyl_group(), side);
}

}  // namespace weylot
