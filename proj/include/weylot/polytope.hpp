#pragma once

// Exact lattice polytopes with 0 in the interior: hulls, duality, faces, volumes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "weylot/triangulation.hpp"

namespace weylot {

/// Facet inequality <x, normal> <= offset; normal primitive integer, offset > 0.
struct Facet {
  RationalVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// A nonempty proper face of a polytope.
struct Face {
  std::vector<std::size_t> vertices;  // sorted indices into Polytope::vertices()
  int dimension = 0;
  std::vector<std::size_t> facets;  // facets containing the face

  friend bool operator==(const Face&, const Face&) = default;
};

/// Full-dimensional polytope with 0 in its interior, stored with both representations.
/// Vertices are sorted lexicographically and facets by (normal, offset), so equal
/// polytopes compare equal. Vertices may be rational (duals of non-reflexive polytopes);
/// `is_lattice` reports whether they are integral.
class Polytope {
 public:
  Polytope() = default;

  /// Trusted construction from an irredundant V/H pair (used by hull and dual).
  Polytope(std::vector<RationalVector> vertices, std::vector<Facet> facets)
      : vertices_(std::move(vertices)), facets_(std::move(facets)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
      if (a.normal == b.normal) return a.offset < b.offset;
      return a.normal < b.normal;
    });
    dim_ = vertices_.front().size();
    facet_vertices_.assign(facets_.size(), {});
    vertex_facets_.assign(vertices_.size(), {});
    for (std::size_t f = 0; f < facets_.size(); ++f)
      for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (bracket(vertices_[v], facets_[f].normal) == facets_[f].offset) {
          facet_vertices_[f].push_back(v);
          vertex_facets_[v].push_back(f);
        }
  }

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<std::size_t>& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }
  const std::vector<std::size_t>& vertex_facets(std::size_t v) const { return vertex_facets_[v]; }

  bool is_lattice() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const RationalVector& v) { return v.is_integral(); });
  }

  std::optional<std::size_t> vertex_index(const RationalVector& x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t require_vertex(const RationalVector& x) const {
    auto i = vertex_index(x);
    if (!i) throw Error(ErrorCode::VertexNotFound, to_string(x) + " is not a vertex");
    return *i;
  }

  bool contains(const RationalVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return bracket(x, f.normal) <= f.offset; });
  }

  /// Indices of facets whose hyperplane passes through x (x assumed in the polytope).
  std::vector<std::size_t> facets_containing(const RationalVector& x) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (bracket(x, facets_[f].normal) == facets_[f].offset) out.push_back(f);
    return out;
  }

  std::vector<RationalVector> facet_points(std::size_t f) const {
    std::vector<RationalVector> pts;
    for (auto v : facet_vertices_[f]) pts.push_back(vertices_[v]);
    return pts;
  }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// Largest ambient dimension accepted by hull and face enumeration.
inline constexpr std::size_t kMaxDimension = 8;

/// Irredundant V- and H-representation of conv(points).
inline Polytope convex_hull(std::vector<RationalVector> points, std::size_t dim) {
  if (points.empty()) throw Error(ErrorCode::NotFullDimensional, "no points");
  for (const auto& p : points)
    if (p.size() != dim) throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
  if (dim == 0 || dim > kMaxDimension)
    throw Error(ErrorCode::InvalidArgument, "dimension must be in 1.." + std::to_string(kMaxDimension));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_dimension(points) != static_cast<int>(dim))
    throw Error(ErrorCode::NotFullDimensional, "affine span of the points is a proper subspace");

  auto hull = detail::hull_facets(points);
  std::vector<Facet> facets;
  std::vector<std::vector<std::size_t>> on_point(points.size());
  for (std::size_t f = 0; f < hull.size(); ++f) {
    if (hull[f].offset <= 0)
      throw Error(ErrorCode::OriginNotInterior, "origin is not in the interior of the hull");
    facets.push_back(Facet{hull[f].normal, hull[f].offset});
    for (auto i : hull[f].points) on_point[i].push_back(f);
  }
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RationalVector> normals;
    for (auto f : on_point[i]) normals.push_back(facets[f].normal);
    if (rank(normals) == dim) vertices.push_back(points[i]);
  }
  return Polytope(std::move(vertices), std::move(facets));
}

/// The polar {n : <m, n> <= 1 for all vertices m}.
inline Polytope dual_polytope(const Polytope& p) {
  std::vector<RationalVector> vertices;
  for (const auto& f : p.facets()) vertices.push_back((1 / f.offset) * f.normal);
  std::vector<Facet> facets;
  for (const auto& v : p.vertices()) {
    auto [z, s] = primitive_integer(v);
    facets.push_back(Facet{to_rational(z), s});
  }
  return Polytope(std::move(vertices), std::move(facets));
}

inline bool is_reflexive(const Polytope& p) {
  if (!p.is_lattice()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.offset == 1; });
}

namespace detail {

inline Bitset vertex_set_of_facets(const Polytope& p, const std::vector<std::size_t>& facets) {
  Bitset s(p.vertices().size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto& vf = p.vertex_facets(v);
    bool all = std::all_of(facets.begin(), facets.end(), [&](std::size_t f) {
      return std::binary_search(vf.begin(), vf.end(), f);
    });
    if (all) s.set(v);
  }
  return s;
}

inline std::vector<Bitset> vertex_facet_bitsets(const Polytope& p) {
  std::vector<Bitset> out(p.vertices().size(), Bitset(p.facets().size()));
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    for (auto f : p.vertex_facets(v)) out[v].set(f);
  return out;
}

}  // namespace detail

/// Every nonempty proper face, ordered by dimension and then lexicographically by
/// sorted vertex-index set.
inline std::vector<Face> enumerate_faces(const Polytope& p) {
  const std::size_t nv = p.vertices().size();
  const std::size_t nf = p.facets().size();
  std::vector<detail::Bitset> facet_sets(nf, detail::Bitset(nv));
  for (std::size_t f = 0; f < nf; ++f)
    for (auto v : p.facet_vertices(f)) facet_sets[f].set(v);

  std::set<detail::Bitset> seen(facet_sets.begin(), facet_sets.end());
  std::vector<detail::Bitset> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t f = 0; f < nf; ++f) {
      detail::Bitset s = queue[q] & facet_sets[f];
      if (s.count() == 0) continue;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }

  std::vector<Face> faces;
  faces.reserve(queue.size());
  for (const auto& s : queue) {
    Face face;
    std::vector<RationalVector> pts;
    for (std::size_t v = 0; v < nv; ++v)
      if (s.test(v)) {
        face.vertices.push_back(v);
        pts.push_back(p.vertices()[v]);
      }
    face.dimension = affine_dimension(pts);
    for (std::size_t f = 0; f < nf; ++f)
      if (facet_sets[f].is_superset_of(s)) face.facets.push_back(f);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.vertices < b.vertices;
  });
  return faces;
}

/// All faces of the boundary containing the vertex m.
inline std::vector<Face> closed_star(const Polytope& p, const RationalVector& m) {
  const std::size_t vi = p.require_vertex(m);
  std::vector<Face> out;
  for (auto& face : enumerate_faces(p))
    if (std::binary_search(face.vertices.begin(), face.vertices.end(), vi)) out.push_back(std::move(face));
  return out;
}

/// Facet tau_m = {n in dual : <m, n> = 1} of the dual, as a face of `dual`.
inline Face dual_facet(const Polytope& p, const Polytope& dual, const RationalVector& m) {
  p.require_vertex(m);
  Face face;
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < dual.vertices().size(); ++i)
    if (bracket(m, dual.vertices()[i]) == 1) {
      face.vertices.push_back(i);
      pts.push_back(dual.vertices()[i]);
    }
  face.dimension = affine_dimension(pts);
  auto [z, s] = primitive_integer(m);
  for (std::size_t f = 0; f < dual.facets().size(); ++f)
    if (dual.facets()[f].normal == to_rational(z)) face.facets.push_back(f);
  return face;
}

inline Face dual_facet(const Polytope& p, const RationalVector& m) {
  return dual_facet(p, dual_polytope(p), m);
}

/// Lattice-normalized volume of conv(pts) within its affine span.
inline Rational lattice_volume(const std::vector<RationalVector>& pts) {
  auto basis = direction_lattice(pts);
  Rational vol = 0;
  for (const auto& s : pulling_triangulation(pts)) vol += lattice_simplex_volume(s, basis);
  return vol;
}

inline Rational lattice_volume(const Polytope& p, const Face& face) {
  std::vector<RationalVector> pts;
  for (auto v : face.vertices) pts.push_back(p.vertices()[v]);
  return lattice_volume(pts);
}

inline Rational lattice_volume(const Polytope& p) { return lattice_volume(p.vertices()); }

inline Rational facet_volume(const Polytope& p, std::size_t f) { return lattice_volume(p.facet_points(f)); }

/// Centroid of the solid polytope, from the cone decomposition over the facets.
inline RationalVector barycenter(const Polytope& p) {
  const std::size_t d = p.dimension();
  RationalVector weighted(d);
  Rational total = 0;
  RationalVector origin(d);
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    for (const auto& s : pulling_triangulation(p.facet_points(f))) {
      RationalMatrix m(s);
      Rational vol = abs(determinant(m)) / factorial(static_cast<unsigned>(d));
      RationalVector c(d);
      for (const auto& v : s) c += v;
      c *= Rational(1, static_cast<long>(d + 1));
      weighted += vol * c;
      total += vol;
    }
  }
  return (1 / total) * weighted;
}

/// Vertex pairs spanning edges, from vertex-facet incidences.
inline std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  auto vf = detail::vertex_facet_bitsets(p);
  const std::size_t nv = vf.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = u + 1; v < nv; ++v) {
      detail::Bitset common = vf[u] & vf[v];
      if (common.count() + 1 < p.dimension()) continue;
      bool edge = true;
      for (std::size_t w = 0; w < nv && edge; ++w)
        if (w != u && w != v && vf[w].is_superset_of(common)) edge = false;
      if (edge) out.emplace_back(u, v);
    }
  return out;
}

/// Smoothness: at each vertex exactly d primitive edge directions forming a Z-basis.
inline bool is_delzant(const Polytope& p) {
  const std::size_t d = p.dimension();
  std::vector<std::vector<RationalVector>> dirs(p.vertices().size());
  for (auto [u, v] : edges(p)) {
    RationalVector e = p.vertices()[v] - p.vertices()[u];
    auto z = to_rational(primitive_integer(e).first);
    dirs[u].push_back(z);
    dirs[v].push_back(-z);
  }
  for (const auto& ds : dirs) {
    if (ds.size() != d) return false;
    if (abs(determinant(RationalMatrix(ds))) != 1) return false;
  }
  return true;
}

}  // namespace weylot
