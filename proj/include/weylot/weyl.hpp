#pragma once

// Weyl polytopes: construction from weights, the reflexive families over the root lattice,
// detection from vertex data, the vertex condition, star containment, classification.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "weylot/root_system.hpp"
#include "weylot/symmetry.hpp"

namespace weylot {

struct WeylPolytopeRecord {
  Polytope polytope;
  RootSystem system;
  RationalVector weight;  // dominant, in M-coordinates
};

/// conv(W m) for a nonzero dominant lattice point m.
inline WeylPolytopeRecord weyl_polytope(const RootSystem& r, const RationalVector& m) {
  if (m.size() != r.rank()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!m.is_integral()) throw Error(ErrorCode::NotLatticePoint, "weight is not a lattice point of M");
  if (!r.in_positive_chamber(m, Side::M)) throw Error(ErrorCode::NotDominant, "weight is not dominant");
  if (m.is_zero()) throw Error(ErrorCode::InvalidArgument, "weight must be nonzero");
  auto orbit = r.orbit(m);
  Polytope p = convex_hull(orbit, r.rank());
  if (p.vertices() != orbit) throw Error(ErrorCode::InvalidArgument, "orbit point is not a vertex");
  return {std::move(p), r, m};
}

/// Weyl polytope of sum_i omega[i] omega_i.
inline WeylPolytopeRecord weyl_polytope(const RootSystem& r, const std::vector<std::int64_t>& omega) {
  return weyl_polytope(r, r.weight(omega));
}

/// The record re-expressed in the coordinates of q, if q is a lattice image of its
/// polytope.
inline std::optional<WeylPolytopeRecord> transport_record(const WeylPolytopeRecord& rec, const Polytope& q) {
  if (q.dimension() != rec.polytope.dimension()) return std::nullopt;
  if (q == rec.polytope) return rec;
  auto phi = unimodular_equivalent(rec.polytope, q);
  if (!phi) return std::nullopt;
  const RationalMatrix basis = rec.system.lattice_basis() * phi->inverse().to_rational();
  auto system = RootSystem::from_cartan(rec.system.cartan(), basis, LatticeKind::Custom);
  RationalVector weight = phi->apply(rec.weight);
  if (system.orbit(weight) != q.vertices())
    throw Error(ErrorCode::InternalError, "transported orbit does not match the target polytope");
  return WeylPolytopeRecord{q, std::move(system), std::move(weight)};
}

/// One row of the table of reflexive Weyl polytopes over the root lattice.
struct FamilyRow {
  int id;
  char family;
  int min_rank;
  int rank_step;  // admissible ranks are min_rank, min_rank + step, ...
  const char* weight_text;
  const char* variety;
  bool smooth;
};

inline const std::vector<FamilyRow>& family_rows() {
  static const std::vector<FamilyRow> rows = {
      {1, 'A', 1, 1, "(n+1)w1", "P^n", true},
      {2, 'A', 2, 1, "w1+wn", "", false},
      {3, 'A', 3, 2, "2w(k+1), n=2k+1", "V_n", false},
      {4, 'A', 4, 2, "wk+w(k+1), n=2k", "V_n", true},
      {5, 'B', 2, 1, "w1", "", false},
      {6, 'B', 2, 1, "2wn", "(P^1)^n", true},
      {7, 'C', 3, 1, "2w1", "", false},
      {8, 'C', 3, 1, "w2", "", false},
      {9, 'D', 4, 1, "2w1", "", false},
      {10, 'D', 4, 1, "w2", "", false},
      {11, 'E', 6, 0, "w2", "", false},
      {12, 'F', 4, 0, "w4", "", false},
      {13, 'G', 2, 0, "w1", "V_2", true},
  };
  return rows;
}

inline const FamilyRow& family_row(int id) {
  for (const auto& r : family_rows())
    if (r.id == id) return r;
  throw Error(ErrorCode::OutOfTableRange, "no table row " + std::to_string(id));
}

inline bool rank_admissible(const FamilyRow& row, int rank) {
  if (rank < row.min_rank) return false;
  if (row.rank_step == 0) return rank == row.min_rank;
  return (rank - row.min_rank) % row.rank_step == 0;
}

/// The `count` smallest admissible ranks of a row (one for exceptional rows).
inline std::vector<int> smallest_ranks(int id, int count) {
  const auto& row = family_row(id);
  std::vector<int> out;
  for (int r = row.min_rank; static_cast<int>(out.size()) < count; r += std::max(row.rank_step, 1)) {
    out.push_back(r);
    if (row.rank_step == 0) break;
  }
  return out;
}

/// Fundamental-weight coordinates of the row's weight at rank n.
inline std::vector<std::int64_t> family_weight(const FamilyRow& row, int n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  auto at = [&](int i) -> std::int64_t& { return w[static_cast<std::size_t>(i - 1)]; };
  switch (row.id) {
    case 1: at(1) = n + 1; break;
    case 2: at(1) += 1; at(n) += 1; break;
    case 3: at((n + 1) / 2) = 2; break;
    case 4: at(n / 2) = 1; at(n / 2 + 1) = 1; break;
    case 5: at(1) = 1; break;
    case 6: at(n) = 2; break;
    case 7: at(1) = 2; break;
    case 8: at(2) = 1; break;
    case 9: at(1) = 2; break;
    case 10: at(2) = 1; break;
    case 11: at(2) = 1; break;
    case 12: at(4) = 1; break;
    case 13: at(1) = 1; break;
  }
  return w;
}

/// Weyl polytope of a table row over the root lattice; must be reflexive.
inline WeylPolytopeRecord mr_family(int id, int rank) {
  const auto& row = family_row(id);
  if (!rank_admissible(row, rank))
    throw Error(ErrorCode::OutOfTableRange,
                "rank " + std::to_string(rank) + " is not admissible for row " + std::to_string(id));
  auto r = build_root_system(row.family, rank, LatticeKind::Root);
  auto rec = weyl_polytope(r, family_weight(row, rank));
  if (!is_reflexive(rec.polytope))
    throw Error(ErrorCode::InternalTableViolation, "row " + std::to_string(id) + " at rank " +
                                                       std::to_string(rank) + " is not reflexive");
  return rec;
}

struct VertexConditionResult {
  bool holds = true;
  std::optional<std::pair<RationalVector, RationalVector>> witness;  // (vertex, dual vertex) with bracket 0
};

/// Whether no vertex of p pairs to zero with a vertex of its dual.
inline VertexConditionResult vertex_condition(const Polytope& p) {
  Polytope dual = dual_polytope(p);
  for (const auto& m : p.vertices())
    for (const auto& n : dual.vertices())
      if (bracket(m, n) == 0) return {false, std::make_pair(m, n)};
  return {};
}

/// A reflection group found inside Aut(p) acting transitively on the vertices.
struct WeylDetection {
  RootSystem system;  // on the polytope's own lattice
  RationalVector dominant_vertex;
  std::size_t reflection_count = 0;
  Integer group_order;  // |W'|
};

/// Detects whether p is the orbit polytope of the group generated by all lattice
/// reflections preserving it. The roots of those reflections form a root system;
/// its simple roots come from a generic linear functional, and the chamber
/// representative of any vertex is returned as the dominant weight.
inline std::optional<WeylDetection> is_weyl_polytope(const Polytope& p) {
  auto refl = lattice_reflections(p);
  if (refl.empty()) return std::nullopt;
  const auto& vs = p.vertices();

  std::vector<bool> reached(vs.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& r : refl) {
      auto w = *p.vertex_index(r.apply(vs[v]));
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != vs.size()) return std::nullopt;

  const std::size_t d = p.dimension();
  std::vector<Reflection> all;
  for (const auto& r : refl) {
    all.push_back(r);
    all.push_back({-r.root, -r.coroot});
  }
  // Generic functional y = (1, t, t^2, ...) vanishing on no root.
  RationalVector y(d);
  for (long t = 2;; ++t) {
    Rational power = 1;
    for (std::size_t i = 0; i < d; ++i) {
      y[i] = power;
      power *= t;
    }
    if (std::none_of(all.begin(), all.end(), [&](const Reflection& r) { return bracket(r.root, y) == 0; })) break;
  }
  std::vector<Reflection> positive;
  std::set<RationalVector> positive_set;
  for (const auto& r : all)
    if (bracket(r.root, y) > 0) {
      positive.push_back(r);
      positive_set.insert(r.root);
    }
  std::vector<Reflection> simple;
  for (const auto& r : positive) {
    bool decomposable = std::any_of(positive.begin(), positive.end(), [&](const Reflection& s) {
      return !(s.root == r.root) && positive_set.count(r.root - s.root);
    });
    if (!decomposable) simple.push_back(r);
  }
  if (simple.size() != d) return std::nullopt;

  CartanMatrix c(d, std::vector<int>(d));
  RationalMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      c[i][j] = static_cast<int>(to_int64(numerator_of(bracket(simple[j].root, simple[i].coroot))));
      s(j, i) = simple[i].root[j];
    }
  }
  auto system = RootSystem::from_cartan(c, *inverse(s), LatticeKind::Custom);
  auto dominant = system.dominant_representative(vs[0]).point;
  WeylDetection det{std::move(system), std::move(dominant), refl.size(), 0};
  det.group_order = weyl_group_order(det.system.types());
  return det;
}

/// is_weyl_polytope applied to the dual; the dual must be a lattice polytope.
inline std::optional<WeylDetection> is_dual_weyl_polytope(const Polytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorCode::NotReflexive, "dual Weyl test needs a reflexive polytope");
  return is_weyl_polytope(dual_polytope(p));
}

enum class ContainmentStatus { Certified, Sampled, Failed };

inline const char* to_string(ContainmentStatus s) {
  switch (s) {
    case ContainmentStatus::Certified: return "pass (certified)";
    case ContainmentStatus::Sampled: return "pass (sampled)";
    case ContainmentStatus::Failed: return "fail";
  }
  return "fail";
}

struct ContainmentSide {
  ContainmentStatus status = ContainmentStatus::Certified;
  std::size_t regions = 0;          // nonempty pieces F ∩ C+ examined
  std::size_t sampled_regions = 0;  // pieces that needed the sampled fallback
  std::optional<RationalVector> witness;
};

struct StarContainmentVerdict {
  ContainmentSide primal;  // boundary ∩ C+_M inside Star(m)
  ContainmentSide dual;    // dual boundary ∩ C+_N inside tau_m

  bool pass() const {
    return primal.status != ContainmentStatus::Failed && dual.status != ContainmentStatus::Failed;
  }
  ContainmentStatus status() const {
    if (!pass()) return ContainmentStatus::Failed;
    if (primal.status == ContainmentStatus::Sampled || dual.status == ContainmentStatus::Sampled)
      return ContainmentStatus::Sampled;
    return ContainmentStatus::Certified;
  }
};

namespace detail {

/// Vertices of the cell of the facet (normal, offset) of `q` cut by the chamber
/// inequalities <x, c_i> >= 0.
inline std::vector<RationalVector> chamber_piece(const Polytope& q, std::size_t facet,
                                                 const std::vector<RationalVector>& chamber) {
  std::vector<RationalVector> a;
  std::vector<Rational> b;
  for (const auto& f : q.facets()) {
    a.push_back(f.normal);
    b.push_back(f.offset);
  }
  for (const auto& c : chamber) {
    a.push_back(-c);
    b.push_back(0);
  }
  return polyhedron_vertices(a, b, {q.facets()[facet].normal}, {q.facets()[facet].offset});
}

/// Checks that conv(region) lies in the target set: certified when all vertices lie on
/// one `target` hyperplane, otherwise by testing barycentric-refinement points.
inline void check_region(const std::vector<RationalVector>& region,
                         const std::vector<std::pair<RationalVector, Rational>>& targets, ContainmentSide& out) {
  if (region.empty()) return;
  ++out.regions;
  auto on = [](const RationalVector& x, const std::pair<RationalVector, Rational>& h) {
    return bracket(x, h.first) == h.second;
  };
  for (const auto& h : targets)
    if (std::all_of(region.begin(), region.end(), [&](const RationalVector& x) { return on(x, h); })) return;
  ++out.sampled_regions;
  if (out.status == ContainmentStatus::Certified) out.status = ContainmentStatus::Sampled;
  std::vector<Simplex> cells = pulling_triangulation(region);
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<Simplex> next;
    for (const auto& s : cells)
      for (auto& t : barycentric_subdivision(s)) next.push_back(std::move(t));
    cells = std::move(next);
  }
  for (const auto& s : cells)
    for (const auto& x : s)
      if (std::none_of(targets.begin(), targets.end(), [&](const auto& h) { return on(x, h); })) {
        out.status = ContainmentStatus::Failed;
        if (!out.witness) out.witness = x;
        return;
      }
}

}  // namespace detail

/// Verifies that the boundary inside the positive chamber lies in Star(m), and that the
/// dual boundary inside the positive dual chamber lies in tau_m.
inline StarContainmentVerdict star_containment_check(const WeylPolytopeRecord& rec) {
  const Polytope& p = rec.polytope;
  const RootSystem& r = rec.system;
  const RationalVector& m = rec.weight;
  const std::size_t vm = p.require_vertex(m);
  StarContainmentVerdict verdict;

  std::vector<RationalVector> coroots, roots;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    coroots.push_back(r.simple_coroot(i));
    roots.push_back(r.simple_root(i));
  }

  std::vector<std::pair<RationalVector, Rational>> star;
  for (auto f : p.vertex_facets(vm)) star.emplace_back(p.facets()[f].normal, p.facets()[f].offset);
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto& fv = p.facet_vertices(f);
    if (std::binary_search(fv.begin(), fv.end(), vm)) continue;
    detail::check_region(detail::chamber_piece(p, f, coroots), star, verdict.primal);
  }

  Polytope dual = dual_polytope(p);
  std::vector<std::pair<RationalVector, Rational>> tau{{m, Rational(1)}};
  const RationalVector tau_normal = to_rational(primitive_integer(m).first);
  for (std::size_t g = 0; g < dual.facets().size(); ++g) {
    if (dual.facets()[g].normal == tau_normal) continue;
    detail::check_region(detail::chamber_piece(dual, g, roots), tau, verdict.dual);
  }
  return verdict;
}

struct ClassificationRecord {
  std::size_t aut_order = 0;
  bool barycenter_zero = false;
  bool reflexive = false;
  std::optional<WeylDetection> weyl;
  std::optional<WeylDetection> dual_weyl;
  VertexConditionResult vertex_condition;
  bool delzant = false;
};

inline ClassificationRecord classify(const Polytope& p) {
  ClassificationRecord rec;
  rec.aut_order = automorphism_group(p).size();
  rec.barycenter_zero = barycenter(p).is_zero();
  rec.reflexive = is_reflexive(p);
  rec.weyl = is_weyl_polytope(p);
  if (rec.reflexive) rec.dual_weyl = is_dual_weyl_polytope(p);
  rec.vertex_condition = vertex_condition(p);
  rec.delzant = is_delzant(p);
  return rec;
}

}  // namespace weylot
