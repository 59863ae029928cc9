#pragma once

// Crystallographic root systems of types A-G and their products, with Bourbaki
// numbering, lattice choices between the root and weight lattices, Weyl groups,
// orbits and chambers.

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weylot/limits.hpp"
#include "weylot/matrix.hpp"

namespace weylot {

using CartanMatrix = std::vector<std::vector<int>>;

/// One irreducible component, e.g. {'B', 3}.
struct SimpleType {
  char family = 'A';
  int rank = 1;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

enum class LatticeKind { Root, Weight, Custom };

inline const char* to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Root: return "root";
    case LatticeKind::Weight: return "weight";
    case LatticeKind::Custom: return "custom";
  }
  return "custom";
}

inline std::string type_label(const std::vector<SimpleType>& types) {
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += 'x';
    s += types[i].family;
    s += std::to_string(types[i].rank);
  }
  return s;
}

/// Parses labels such as "B3" or "A1xA2".
inline std::vector<SimpleType> parse_type_label(const std::string& label) {
  std::vector<SimpleType> out;
  std::size_t i = 0;
  while (i < label.size()) {
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[i])));
    if (f < 'A' || f > 'G') throw Error(ErrorCode::UnsupportedType, "bad root system label '" + label + "'");
    std::size_t j = i + 1;
    while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
    if (j == i + 1) throw Error(ErrorCode::UnsupportedType, "missing rank in '" + label + "'");
    out.push_back({f, std::stoi(label.substr(i + 1, j - i - 1))});
    if (j < label.size()) {
      if (label[j] != 'x' && label[j] != 'X' && label[j] != '*')
        throw Error(ErrorCode::UnsupportedType, "bad separator in '" + label + "'");
      ++j;
      if (j == label.size()) throw Error(ErrorCode::UnsupportedType, "trailing separator in '" + label + "'");
    }
    i = j;
  }
  if (out.empty()) throw Error(ErrorCode::UnsupportedType, "empty root system label");
  return out;
}

inline bool is_supported_type(SimpleType t) {
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 3;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank == 6;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
  }
  return false;
}

/// Types that can be recognised from a Cartan matrix; E7 and E8 are named but not built.
inline bool is_classifiable_type(SimpleType t) {
  return is_supported_type(t) || (t.family == 'E' && (t.rank == 7 || t.rank == 8));
}

/// Bourbaki Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>.
inline CartanMatrix bourbaki_cartan(SimpleType t) {
  if (!is_classifiable_type(t))
    throw Error(ErrorCode::UnsupportedType, type_label({t}) + " is not supported");
  const int n = t.rank;
  CartanMatrix c(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (t.family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (t.family == 'B') c[n - 1][n - 2] = -2;
      if (t.family == 'C') c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case 'G':
      link(0, 1);
      c[0][1] = -3;
      break;
  }
  return c;
}

namespace detail {

inline RationalMatrix cartan_to_rational(const CartanMatrix& c) {
  RationalMatrix m(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c[i][j];
  return m;
}

inline bool is_integral_matrix(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!weylot::is_integral(m(i, j))) return false;
  return true;
}

/// Permutation p with c[p[i]][p[j]] == target[i][j], by backtracking.
inline std::optional<std::vector<std::size_t>> match_cartan(const CartanMatrix& c, const std::vector<std::size_t>& nodes,
                                                            const CartanMatrix& target) {
  const std::size_t n = nodes.size();
  if (target.size() != n) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = c[nodes[cand]][nodes[perm[j]]] == target[k][j] && c[nodes[perm[j]]][nodes[cand]] == target[j][k];
      if (!ok) continue;
      used[cand] = true;
      perm[k] = cand;
      if (rec(k + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = nodes[perm[k]];
  return out;
}

/// Splits a Cartan matrix into irreducible components, identifies each one, and
/// returns the Bourbaki reordering of the simple roots (component by component).
inline std::pair<std::vector<SimpleType>, std::vector<std::size_t>> classify_cartan(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    components.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(components.size() - 1);
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      components.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && (c[i][j] != 0 || c[j][i] != 0)) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
    std::sort(components.back().begin(), components.back().end());
  }
  std::vector<SimpleType> types;
  std::vector<std::size_t> order;
  for (const auto& nodes : components) {
    const int r = static_cast<int>(nodes.size());
    std::vector<SimpleType> candidates;
    for (char f : std::string("ABCDEFG")) {
      SimpleType t{f, r};
      if (is_classifiable_type(t)) candidates.push_back(t);
    }
    bool found = false;
    for (auto t : candidates) {
      auto perm = match_cartan(c, nodes, bourbaki_cartan(t));
      if (!perm) continue;
      types.push_back(t);
      order.insert(order.end(), perm->begin(), perm->end());
      found = true;
      break;
    }
    if (!found) throw Error(ErrorCode::UnsupportedType, "Cartan matrix of an unsupported type");
  }
  return {types, order};
}

}  // namespace detail

/// Order of the Weyl group of one irreducible type.
inline Integer weyl_group_order(SimpleType t) {
  auto fact = [](int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case 'A': return fact(t.rank + 1);
    case 'B':
    case 'C': return (Integer(1) << t.rank) * fact(t.rank);
    case 'D': return (Integer(1) << (t.rank - 1)) * fact(t.rank);
    case 'E': return t.rank == 6 ? Integer(51840) : t.rank == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

inline Integer weyl_group_order(const std::vector<SimpleType>& types) {
  Integer o = 1;
  for (auto t : types) o *= weyl_group_order(t);
  return o;
}

/// The Weyl group as explicit matrices on M-coordinates, with the contragredient
/// action on N-coordinates and a reduced word for each element.
struct WeylGroup {
  std::vector<UnimodularMap> elements;  // elements[0] is the identity
  std::vector<UnimodularMap> dual;      // dual[k] = elements[k]^{-T}
  std::vector<std::vector<std::size_t>> words;  // simple reflection indices, applied right to left
  std::vector<UnimodularMap> generators;

  std::size_t order() const { return elements.size(); }
};

/// Result of folding a point into the positive chamber.
struct DominantResult {
  RationalVector point;
  std::vector<std::size_t> word;  // simple reflections applied, first to last
  UnimodularMap map;              // map(x) = point on the same side
};

enum class Side { M, N };

class RootSystem {
 public:
  RootSystem() = default;

  /// Root system with the given Cartan matrix whose lattice M has basis `basis`
  /// (columns, in simple-root coordinates). Simple roots are reordered into
  /// Bourbaki order, component by component.
  static RootSystem from_cartan(const CartanMatrix& cartan, const RationalMatrix& basis, LatticeKind kind) {
    auto [types, order] = detail::classify_cartan(cartan);
    const std::size_t n = cartan.size();
    CartanMatrix c(n, std::vector<int>(n));
    RationalMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c[i][j] = cartan[order[i]][order[j]];
        b(i, j) = basis(order[i], j);
      }
    }
    RootSystem r;
    r.types_ = std::move(types);
    r.cartan_ = std::move(c);
    r.kind_ = kind;
    r.init(b);
    return r;
  }

  const std::vector<SimpleType>& types() const noexcept { return types_; }
  std::string label() const { return type_label(types_); }
  std::size_t rank() const noexcept { return cartan_.size(); }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  LatticeKind lattice_kind() const noexcept { return kind_; }
  /// Columns are the basis of M in simple-root coordinates.
  const RationalMatrix& lattice_basis() const noexcept { return basis_; }

  /// Roots in M-coordinates, index-aligned with coroots in N-coordinates.
  const std::vector<RationalVector>& roots() const noexcept { return roots_; }
  const std::vector<RationalVector>& coroots() const noexcept { return coroots_; }
  /// Simple roots as indices into roots(), in Bourbaki order.
  const std::vector<std::size_t>& simple_roots() const noexcept { return simple_; }
  std::vector<std::size_t> positive_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (positive_[i]) out.push_back(i);
    return out;
  }
  bool is_positive(std::size_t root) const { return positive_[root]; }

  const RationalVector& simple_root(std::size_t i) const { return roots_[simple_[i]]; }
  const RationalVector& simple_coroot(std::size_t i) const { return coroots_[simple_[i]]; }

  /// Simple-root coordinates of a point of M.
  RationalVector to_alpha(const RationalVector& x) const { return basis_ * x; }
  RationalVector from_alpha(const RationalVector& a) const { return basis_inv_ * a; }

  /// M-coordinates of sum_i w_i omega_i; throws NotLatticePoint if it is not in M.
  RationalVector weight(const std::vector<std::int64_t>& omega) const {
    if (omega.size() != rank()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
    RationalVector x = from_alpha(cartan_inv_ * RationalVector::from_ints(omega));
    if (!x.is_integral()) throw Error(ErrorCode::NotLatticePoint, "weight is not in the lattice M");
    return x;
  }

  /// Fundamental-weight coordinates <x, alpha_i^vee> of a point of M.
  RationalVector omega_coordinates(const RationalVector& x) const {
    RationalVector w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = bracket(x, simple_coroot(i));
    return w;
  }

  RationalVector apply_reflection(std::size_t root, const RationalVector& x, Side side) const {
    if (root >= roots_.size()) throw Error(ErrorCode::InvalidArgument, "root index out of range");
    if (side == Side::M) return x - bracket(x, coroots_[root]) * roots_[root];
    return x - bracket(roots_[root], x) * coroots_[root];
  }

  RationalVector simple_reflection(std::size_t i, const RationalVector& x, Side side) const {
    return apply_reflection(simple_[i], x, side);
  }

  bool in_positive_chamber(const RationalVector& x, Side side) const {
    for (std::size_t i = 0; i < rank(); ++i) {
      Rational v = side == Side::M ? bracket(x, simple_coroot(i)) : bracket(simple_root(i), x);
      if (v < 0) return false;
    }
    return true;
  }

  /// Matrix of the simple reflection on M-coordinates.
  UnimodularMap simple_reflection_matrix(std::size_t i) const {
    const std::size_t n = rank();
    RationalMatrix m = RationalMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) -= simple_root(i)[a] * simple_coroot(i)[b];
    return UnimodularMap::from_rational(m);
  }

  /// W-orbit of x by breadth-first closure under simple reflections, sorted.
  std::vector<RationalVector> orbit(const RationalVector& x, Side side = Side::M) const {
    const std::size_t cap = orbit_cap();
    std::set<RationalVector> seen{x};
    std::deque<RationalVector> queue{x};
    while (!queue.empty()) {
      RationalVector y = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < rank(); ++i) {
        RationalVector z = simple_reflection(i, y, side);
        if (seen.insert(z).second) {
          if (seen.size() > cap) throw Error(ErrorCode::OrbitCapExceeded, "orbit exceeds cap");
          queue.push_back(std::move(z));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  /// Subgroup generated by the simple reflections with indices in `gens`.
  WeylGroup parabolic_subgroup(const std::vector<std::size_t>& gens) const {
    const std::size_t cap = orbit_cap();
    WeylGroup g;
    for (auto i : gens) g.generators.push_back(simple_reflection_matrix(i));
    std::unordered_map<UnimodularMap, std::size_t, UnimodularMapHash> index;
    g.elements.push_back(UnimodularMap::identity(rank()));
    g.words.push_back({});
    index.emplace(g.elements.front(), 0);
    for (std::size_t k = 0; k < g.elements.size(); ++k) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        UnimodularMap next = g.generators[gi] * g.elements[k];
        if (index.count(next)) continue;
        if (g.elements.size() + 1 > cap) throw Error(ErrorCode::OrbitCapExceeded, "Weyl group exceeds cap");
        index.emplace(next, g.elements.size());
        auto word = g.words[k];
        word.push_back(gens[gi]);
        g.elements.push_back(std::move(next));
        g.words.push_back(std::move(word));
      }
    }
    for (const auto& e : g.elements) g.dual.push_back(e.inverse().transpose());
    return g;
  }

  WeylGroup weyl_group() const {
    std::vector<std::size_t> all(rank());
    std::iota(all.begin(), all.end(), 0);
    return parabolic_subgroup(all);
  }

  /// Folds x into the closed positive chamber by reflecting at the first violated
  /// simple root until none is violated.
  DominantResult dominant_representative(const RationalVector& x, Side side = Side::M) const {
    DominantResult res{x, {}, UnimodularMap::identity(rank())};
    while (true) {
      std::optional<std::size_t> bad;
      for (std::size_t i = 0; i < rank() && !bad; ++i) {
        Rational v = side == Side::M ? bracket(res.point, simple_coroot(i)) : bracket(simple_root(i), res.point);
        if (v < 0) bad = i;
      }
      if (!bad) break;
      res.point = simple_reflection(*bad, res.point, side);
      res.word.push_back(*bad);
      UnimodularMap s = simple_reflection_matrix(*bad);
      res.map = (side == Side::M ? s : s.transpose()) * res.map;
    }
    return res;
  }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.types_ == b.types_ && a.cartan_ == b.cartan_ && a.basis_ == b.basis_ && a.roots_ == b.roots_ &&
           a.coroots_ == b.coroots_;
  }

 private:
  void init(const RationalMatrix& basis) {
    const std::size_t n = cartan_.size();
    basis_ = basis;
    auto inv = inverse(basis_);
    if (!inv) throw Error(ErrorCode::InvalidArgument, "lattice basis is singular");
    basis_inv_ = *inv;
    RationalMatrix c = detail::cartan_to_rational(cartan_);
    cartan_inv_ = *inverse(c);
    // Lambda_r in M: simple roots have integral M-coordinates. M in Lambda_w: the M
    // basis pairs integrally with the simple coroots.
    if (!detail::is_integral_matrix(basis_inv_) || !detail::is_integral_matrix(c * basis_))
      throw Error(ErrorCode::InvalidArgument, "lattice must lie between the root and weight lattices");

    // Closure of (root, coroot) pairs, in simple-root / simple-coroot-dual coordinates.
    std::map<RationalVector, RationalVector> pairs;
    std::deque<RationalVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector a = RationalVector::unit(n, i);
      RationalVector nu(n);
      for (std::size_t k = 0; k < n; ++k) nu[k] = cartan_[i][k];
      pairs.emplace(a, nu);
      queue.push_back(a);
    }
    while (!queue.empty()) {
      RationalVector a = queue.front();
      queue.pop_front();
      RationalVector nu = pairs.at(a);
      for (std::size_t i = 0; i < n; ++i) {
        Rational p = 0;
        for (std::size_t k = 0; k < n; ++k) p += a[k] * cartan_[i][k];
        RationalVector a2 = a;
        a2[i] -= p;
        RationalVector nu2 = nu;
        for (std::size_t k = 0; k < n; ++k) nu2[k] -= nu[i] * cartan_[i][k];
        if (pairs.emplace(a2, nu2).second) queue.push_back(a2);
      }
    }
    const RationalMatrix bt = basis_.transpose();
    for (const auto& [a, nu] : pairs) {
      roots_.push_back(basis_inv_ * a);
      coroots_.push_back(bt * nu);
      bool pos = std::all_of(a.begin(), a.end(), [](const Rational& q) { return q >= 0; });
      positive_.push_back(pos);
    }
    simple_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = pairs.find(RationalVector::unit(n, i));
      simple_[i] = static_cast<std::size_t>(std::distance(pairs.begin(), it));
    }
  }

  std::vector<SimpleType> types_;
  CartanMatrix cartan_;
  LatticeKind kind_ = LatticeKind::Root;
  RationalMatrix basis_, basis_inv_, cartan_inv_;
  std::vector<RationalVector> roots_, coroots_;
  std::vector<bool> positive_;
  std::vector<std::size_t> simple_;
};

namespace detail {

inline CartanMatrix block_sum(const CartanMatrix& a, const CartanMatrix& b) {
  const std::size_t n = a.size() + b.size();
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[a.size() + i][a.size() + j] = b[i][j];
  return c;
}

inline RationalMatrix block_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

inline RationalMatrix weight_basis(const CartanMatrix& c) { return *inverse(cartan_to_rational(c)); }

}  // namespace detail

/// Root system of the given types on the root lattice (simple-root basis), the weight
/// lattice (fundamental-weight basis), or a custom lattice whose basis columns are
/// given in simple-root coordinates.
inline RootSystem build_root_system(const std::vector<SimpleType>& types, LatticeKind kind,
                                    const std::optional<RationalMatrix>& custom_basis = std::nullopt) {
  if (types.empty()) throw Error(ErrorCode::UnsupportedType, "no components");
  CartanMatrix c;
  for (auto t : types) {
    if (!is_supported_type(t)) throw Error(ErrorCode::UnsupportedType, type_label({t}) + " is not supported");
    c = detail::block_sum(c, bourbaki_cartan(t));
  }
  RationalMatrix basis;
  switch (kind) {
    case LatticeKind::Root: basis = RationalMatrix::identity(c.size()); break;
    case LatticeKind::Weight: basis = detail::weight_basis(c); break;
    case LatticeKind::Custom:
      if (!custom_basis || custom_basis->rows() != c.size() || custom_basis->cols() != c.size())
        throw Error(ErrorCode::InvalidArgument, "custom lattice needs a square basis of full rank");
      basis = *custom_basis;
      break;
  }
  auto r = RootSystem::from_cartan(c, basis, kind);
  return r;
}

inline RootSystem build_root_system(char family, int rank, LatticeKind kind = LatticeKind::Root) {
  return build_root_system({SimpleType{family, rank}}, kind);
}

inline RootSystem build_root_system(const std::string& label, LatticeKind kind = LatticeKind::Root) {
  return build_root_system(parse_type_label(label), kind);
}

/// Direct sum: roots and coroots of each factor padded by zeros.
inline RootSystem product(const RootSystem& a, const RootSystem& b) {
  LatticeKind kind = a.lattice_kind() == b.lattice_kind() ? a.lattice_kind() : LatticeKind::Custom;
  return RootSystem::from_cartan(detail::block_sum(a.cartan(), b.cartan()),
                                 detail::block_sum(a.lattice_basis(), b.lattice_basis()), kind);
}

/// The dual system on N: coroots become roots. Its lattice is the dual of M, so the
/// root and weight lattice choices are exchanged.
inline RootSystem dual_system(const RootSystem& r) {
  const std::size_t n = r.rank();
  CartanMatrix ct(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ct[i][j] = r.cartan()[j][i];
  // Basis of N in simple-coroot coordinates: (C B)^{-T}.
  RationalMatrix cb = detail::cartan_to_rational(r.cartan()) * r.lattice_basis();
  RationalMatrix basis = *inverse(cb.transpose());
  LatticeKind kind = r.lattice_kind() == LatticeKind::Root     ? LatticeKind::Weight
                     : r.lattice_kind() == LatticeKind::Weight ? LatticeKind::Root
                                                               : LatticeKind::Custom;
  return RootSystem::from_cartan(ct, basis, kind);
}

/// Parabolic cone C_L = union of w(C+_N) over w in W_L, where L lists the simple roots
/// orthogonal to the dominant weight m.
struct ParabolicChamber {
  std::vector<std::size_t> levi;  // L
  WeylGroup subgroup;             // W_L
  const RootSystem* system = nullptr;

  bool contains(const RationalVector& n) const {
    for (const auto& w : subgroup.dual) {
      // n in w(C+) iff w^{-1} n in C+; the dual list is closed under inverses.
      if (system->in_positive_chamber(w.apply(n), Side::N)) return true;
    }
    return false;
  }
};

inline ParabolicChamber parabolic_chamber_union(const RootSystem& r, const RationalVector& m) {
  if (!r.in_positive_chamber(m, Side::M)) throw Error(ErrorCode::NotDominant, "weight is not dominant");
  ParabolicChamber pc;
  for (std::size_t i = 0; i < r.rank(); ++i)
    if (bracket(m, r.simple_coroot(i)) == 0) pc.levi.push_back(i);
  pc.subgroup = r.parabolic_subgroup(pc.levi);
  pc.system = &r;
  return pc;
}

}  // namespace weylot
