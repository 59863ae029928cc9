#pragma once

// Lattice automorphisms, unimodular equivalence, and lattice reflections of polytopes.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "weylot/limits.hpp"
#include "weylot/polytope.hpp"

namespace weylot {

namespace detail {

/// Brackets of every vertex with every facet normal, plus offsets. The multiset
/// {(<v, n_f>, h_f)} over facets is invariant under unimodular maps, as are the
/// pair versions; both are used to prune the basis-image search.
struct IncidenceTable {
  std::vector<std::vector<Rational>> br;  // [vertex][facet]
  std::vector<Rational> offsets;
  std::vector<std::vector<std::pair<Rational, Rational>>> unary;

  explicit IncidenceTable(const Polytope& p) {
    const auto& vs = p.vertices();
    const auto& fs = p.facets();
    br.assign(vs.size(), std::vector<Rational>(fs.size()));
    for (const auto& f : fs) offsets.push_back(f.offset);
    unary.resize(vs.size());
    for (std::size_t v = 0; v < vs.size(); ++v) {
      for (std::size_t f = 0; f < fs.size(); ++f) {
        br[v][f] = bracket(vs[v], fs[f].normal);
        unary[v].emplace_back(br[v][f], offsets[f]);
      }
      std::sort(unary[v].begin(), unary[v].end());
    }
  }

  std::vector<std::tuple<Rational, Rational, Rational>> pair(std::size_t u, std::size_t v) const {
    std::vector<std::tuple<Rational, Rational, Rational>> s;
    s.reserve(offsets.size());
    for (std::size_t f = 0; f < offsets.size(); ++f) s.emplace_back(br[u][f], br[v][f], offsets[f]);
    std::sort(s.begin(), s.end());
    return s;
  }
};

inline std::vector<std::vector<std::int64_t>> scaled_vertices(const Polytope& p, const Integer& scale) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : p.vertices()) out.push_back(to_int64(Rational(scale) * v));
  return out;
}

inline Integer vertex_denominator(const Polytope& p) {
  Integer l = 1;
  for (const auto& v : p.vertices()) l = lcm(l, v.common_denominator());
  return l;
}

/// Unimodular maps A with A(V(p)) = V(q). Stops after `limit` maps; throws
/// GroupCapExceeded when more than `cap` maps exist.
inline std::vector<UnimodularMap> lattice_isomorphisms(const Polytope& p, const Polytope& q, std::size_t limit,
                                                       std::size_t cap) {
  const std::size_t d = p.dimension();
  if (q.dimension() != d || p.vertices().size() != q.vertices().size() ||
      p.facets().size() != q.facets().size())
    return {};
  IncidenceTable tp(p), tq(q);
  {
    auto a = tp.unary, b = tq.unary;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {};
  }

  // Linear basis of vertices of p, preferring vertices whose signature is rare in q.
  std::vector<std::size_t> order(p.vertices().size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> rarity(order.size());
  for (std::size_t v = 0; v < order.size(); ++v)
    rarity[v] = static_cast<std::size_t>(std::count(tq.unary.begin(), tq.unary.end(), tp.unary[v]));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rarity[a] < rarity[b]; });
  std::vector<std::size_t> basis;
  std::vector<RationalVector> chosen;
  for (auto v : order) {
    if (basis.size() == d) break;
    auto cand = chosen;
    cand.push_back(p.vertices()[v]);
    if (rank(cand) == cand.size()) {
      chosen = std::move(cand);
      basis.push_back(v);
    }
  }

  const Integer scale = lcm(vertex_denominator(p), vertex_denominator(q));
  auto vq = scaled_vertices(q, scale);
  std::unordered_set<std::vector<std::int64_t>, Int64VectorHash> qset(vq.begin(), vq.end());
  auto vp = scaled_vertices(p, scale);

  RationalMatrix b(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) b(i, j) = Rational(vp[basis[j]][i]);
  const RationalMatrix binv = *inverse(b);

  std::vector<std::vector<std::tuple<Rational, Rational, Rational>>> basis_pairs(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) basis_pairs[i * d + j] = tp.pair(basis[j], basis[i]);

  std::vector<UnimodularMap> found;
  std::vector<std::size_t> img(d);
  std::vector<bool> used(q.vertices().size(), false);

  auto try_map = [&]() {
    RationalMatrix c(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) c(i, j) = Rational(vq[img[j]][i]);
    RationalMatrix a = c * binv;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!is_integral(a(i, j))) return;
    UnimodularMap m = UnimodularMap::from_rational(a);
    for (const auto& v : vp)
      if (!qset.count(m.apply(v))) return;
    auto det = m.determinant();
    if (det != 1 && det != -1) return;
    found.push_back(std::move(m));
    if (found.size() > cap) throw Error(ErrorCode::GroupCapExceeded, "automorphism group exceeds cap");
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found.size() >= limit) return;
    if (k == d) {
      try_map();
      return;
    }
    for (std::size_t c = 0; c < q.vertices().size() && found.size() < limit; ++c) {
      if (used[c] || tq.unary[c] != tp.unary[basis[k]]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = tq.pair(img[j], c) == basis_pairs[k * d + j];
      if (!ok) continue;
      used[c] = true;
      img[k] = c;
      rec(k + 1);
      used[c] = false;
    }
  };
  rec(0);
  return found;
}

}  // namespace detail

/// All unimodular maps permuting V(p), sorted. Throws GroupCapExceeded beyond the orbit cap.
inline std::vector<UnimodularMap> automorphism_group(const Polytope& p) {
  const std::size_t cap = orbit_cap();
  auto g = detail::lattice_isomorphisms(p, p, cap + 1, cap);
  std::sort(g.begin(), g.end());
  return g;
}

/// A unimodular map sending V(p) onto V(q), if one exists.
inline std::optional<UnimodularMap> unimodular_equivalent(const Polytope& p, const Polytope& q) {
  if (p == q) return UnimodularMap::identity(p.dimension());
  auto maps = detail::lattice_isomorphisms(p, q, 1, orbit_cap());
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

/// A lattice reflection x -> x - <x, coroot> root of M with root primitive and
/// <root, coroot> = 2.
struct Reflection {
  RationalVector root;
  RationalVector coroot;

  RationalVector apply(const RationalVector& x) const { return x - bracket(x, coroot) * root; }
  RationalVector apply_dual(const RationalVector& n) const { return n - bracket(root, n) * coroot; }

  friend bool operator==(const Reflection&, const Reflection&) = default;
};

namespace detail {

inline RationalVector primitive_direction(const RationalVector& v) {
  auto z = to_rational(primitive_integer(v).first);
  for (const auto& x : z) {
    if (x > 0) break;
    if (x < 0) return -z;
  }
  return z;
}

inline bool permutes_vertices(const Polytope& p, const Reflection& r) {
  for (const auto& v : p.vertices())
    if (!p.vertex_index(r.apply(v))) return false;
  return true;
}

}  // namespace detail

/// Every lattice reflection in Aut(p), one entry per reflection with the root's first
/// nonzero coordinate positive, sorted by root.
///
/// The root of a reflection is parallel to a difference of two vertices and its
/// coroot to a difference of two dual vertices, so candidates are read off pairs on
/// whichever side has fewer vertices; the opposite vector is then fixed by where one
/// vertex (or dual vertex) off the mirror can go.
inline std::vector<Reflection> lattice_reflections(const Polytope& p) {
  const Polytope dual = dual_polytope(p);
  const auto& vs = p.vertices();
  const auto& ds = dual.vertices();
  std::vector<Reflection> out;
  std::set<RationalVector> directions;

  auto accept = [&](const RationalVector& root_dir, const RationalVector& coroot_dir) {
    RationalVector a = detail::primitive_direction(root_dir);
    Rational pair = bracket(a, coroot_dir);
    if (pair == 0) return false;
    RationalVector av = (Rational(2) / pair) * coroot_dir;
    if (!av.is_integral()) return false;
    Reflection r{a, av};
    if (!detail::permutes_vertices(p, r)) return false;
    out.push_back(std::move(r));
    return true;
  };

  if (ds.size() <= vs.size()) {
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        RationalVector c = detail::primitive_direction(ds[i] - ds[j]);
        if (!directions.insert(c).second) continue;
        auto v = std::find_if(vs.begin(), vs.end(), [&](const RationalVector& x) { return bracket(x, c) != 0; });
        const Rational target = -bracket(*v, c);
        for (const auto& w : vs)
          if (bracket(w, c) == target && accept(*v - w, c)) break;
      }
  } else {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        RationalVector a = detail::primitive_direction(vs[i] - vs[j]);
        if (!directions.insert(a).second) continue;
        auto n = std::find_if(ds.begin(), ds.end(), [&](const RationalVector& y) { return bracket(a, y) != 0; });
        const Rational target = -bracket(a, *n);
        for (const auto& m : ds)
          if (bracket(a, m) == target && accept(a, *n - m)) break;
      }
  }
  std::sort(out.begin(), out.end(), [](const Reflection& x, const Reflection& y) { return x.root < y.root; });
  return out;
}

}  // namespace weylot
