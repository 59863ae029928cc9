#pragma once

// Exact discrete optimal transport for the cost c(m, n) = -<m, n> between boundary
// clouds of a reflexive polytope and its dual, and the stability certificates.

#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>

#include "weylot/network_simplex.hpp"
#include "weylot/surface_measure.hpp"
#include "weylot/weyl.hpp"

namespace weylot {

struct TransportPlan {
  struct Triple {
    std::size_t source;
    std::size_t target;
    Rational mass;

    friend bool operator==(const Triple&, const Triple&) = default;
  };
  std::vector<Triple> triples;  // sorted by (source, target), masses positive
  Rational cost_value = 0;
};

struct KantorovichPotentials {
  std::vector<Rational> phi;  // per source point
  std::vector<Rational> psi;  // per target point
};

inline Rational transport_cost(const RationalVector& m, const RationalVector& n) { return -bracket(m, n); }

namespace detail {

inline Integer coordinate_denominator(const std::vector<RationalVector>& pts) {
  Integer l = 1;
  for (const auto& p : pts) l = lcm(l, p.common_denominator());
  return l;
}

/// Clouds rescaled to integers so that c(m_i, n_j) = cost(i, j) / scale exactly.
class ScaledCosts {
 public:
  ScaledCosts(const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
    const Integer lm = coordinate_denominator(mu.points), ln = coordinate_denominator(nu.points);
    for (const auto& p : mu.points) m_.push_back(to_int64(Rational(lm) * p));
    for (const auto& p : nu.points) n_.push_back(to_int64(Rational(ln) * p));
    scale_ = to_int64(lm * ln);
  }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    __int128 s = 0;
    for (std::size_t k = 0; k < m_[i].size(); ++k) s += static_cast<__int128>(m_[i][k]) * n_[j][k];
    if (s > INT64_MAX || s < -INT64_MAX) throw Error(ErrorCode::ArithmeticOverflow, "transport cost overflow");
    return -static_cast<std::int64_t>(s);
  }

  std::int64_t scale() const { return scale_; }
  const std::vector<std::int64_t>& source(std::size_t i) const { return m_[i]; }
  const std::vector<std::int64_t>& target(std::size_t j) const { return n_[j]; }

 private:
  std::vector<std::vector<std::int64_t>> m_, n_;
  std::int64_t scale_ = 1;
};

inline void check_balanced(const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  if (mu.size() == 0 || nu.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty point cloud");
  if (mu.total() != nu.total()) throw Error(ErrorCode::UnbalancedMasses, "source and target totals differ");
  if (mu.total() != 1) throw Error(ErrorCode::UnbalancedMasses, "clouds must be probability measures");
}

inline std::size_t lexmin_index(const std::vector<RationalVector>& pts) {
  return static_cast<std::size_t>(std::min_element(pts.begin(), pts.end()) - pts.begin());
}

inline Rational plan_cost(const TransportPlan& plan, const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  Rational c = 0;
  for (const auto& t : plan.triples) c += t.mass * transport_cost(mu.points[t.source], nu.points[t.target]);
  return c;
}

}  // namespace detail

/// Exactly optimal plan and potentials with phi = 0 at the lexicographically smallest
/// source point.
inline std::pair<TransportPlan, KantorovichPotentials> solve_ot(const WeightedPointCloud& mu,
                                                                 const WeightedPointCloud& nu,
                                                                 PivotRule rule = PivotRule::BlockSearch) {
  detail::check_balanced(mu, nu);
  detail::ScaledCosts costs(mu, nu);
  Integer lmass = 1;
  for (const auto& m : mu.masses) lmass = lcm(lmass, denominator_of(m));
  for (const auto& m : nu.masses) lmass = lcm(lmass, denominator_of(m));
  std::vector<std::int64_t> supply, demand;
  for (const auto& m : mu.masses) supply.push_back(to_int64(numerator_of(m * Rational(lmass))));
  for (const auto& m : nu.masses) demand.push_back(to_int64(numerator_of(m * Rational(lmass))));
  std::vector<std::int64_t> cost(mu.size() * nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) cost[i * nu.size() + j] = costs(i, j);

  auto sol = solve_transportation(supply, demand, std::move(cost), rule);

  TransportPlan plan;
  for (const auto& f : sol.flows) plan.triples.push_back({f.source, f.target, Rational(f.amount) / Rational(lmass)});
  plan.cost_value = Rational(sol.cost) / (Rational(lmass) * Rational(costs.scale()));

  KantorovichPotentials pot;
  const Rational s(costs.scale());
  const std::size_t anchor = detail::lexmin_index(mu.points);
  const std::int64_t shift = sol.source_potential[anchor];
  for (auto p : sol.source_potential) pot.phi.push_back(Rational(shift - p) / s);
  for (auto p : sol.target_potential) pot.psi.push_back(Rational(p - shift) / s);
  return {std::move(plan), std::move(pot)};
}

/// cost - (sum phi mu + sum psi nu); zero for an optimal pair.
inline Rational duality_gap(const TransportPlan& plan, const KantorovichPotentials& pot, const WeightedPointCloud& mu,
                            const WeightedPointCloud& nu) {
  Rational gap = detail::plan_cost(plan, mu, nu);
  for (std::size_t i = 0; i < mu.size(); ++i) gap -= pot.phi[i] * mu.masses[i];
  for (std::size_t j = 0; j < nu.size(); ++j) gap -= pot.psi[j] * nu.masses[j];
  return gap;
}

/// phi(m) + psi(n) <= c(m, n) for every pair, with equality on the plan's support.
inline bool potentials_feasible(const TransportPlan& plan, const KantorovichPotentials& pot,
                                const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  detail::ScaledCosts costs(mu, nu);
  const Rational s(costs.scale());
  std::vector<Rational> phi, psi;
  bool integral = true;
  for (const auto& x : pot.phi) {
    phi.push_back(x * s);
    integral = integral && is_integral(phi.back());
  }
  for (const auto& x : pot.psi) {
    psi.push_back(x * s);
    integral = integral && is_integral(psi.back());
  }
  if (integral) {
    std::vector<std::int64_t> p, q;
    for (const auto& x : phi) p.push_back(to_int64(numerator_of(x)));
    for (const auto& x : psi) q.push_back(to_int64(numerator_of(x)));
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t j = 0; j < nu.size(); ++j)
        if (static_cast<__int128>(p[i]) + q[j] > costs(i, j)) return false;
  } else {
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t j = 0; j < nu.size(); ++j)
        if (phi[i] + psi[j] > Rational(costs(i, j))) return false;
  }
  for (const auto& t : plan.triples)
    if (phi[t.source] + psi[t.target] != Rational(costs(t.source, t.target))) return false;
  return true;
}

/// Marginals of the plan equal the cloud masses exactly.
inline bool marginals_match(const TransportPlan& plan, const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  std::vector<Rational> row(mu.size(), Rational(0)), col(nu.size(), Rational(0));
  for (const auto& t : plan.triples) {
    if (t.mass <= 0) return false;
    row[t.source] += t.mass;
    col[t.target] += t.mass;
  }
  return row == mu.masses && col == nu.masses;
}

/// Average of (w, w^vee)_* plan over the group.
inline TransportPlan symmetrize_plan(const TransportPlan& plan, const WeylGroup& group, const WeightedPointCloud& mu,
                                     const WeightedPointCloud& nu) {
  if (group.order() > orbit_cap()) throw Error(ErrorCode::GroupCapExceeded, "group exceeds cap");
  std::map<RationalVector, std::size_t> mi, ni;
  for (std::size_t i = 0; i < mu.size(); ++i) mi.emplace(mu.points[i], i);
  for (std::size_t j = 0; j < nu.size(); ++j) ni.emplace(nu.points[j], j);
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  const Rational share(1, static_cast<long>(group.order()));
  for (std::size_t k = 0; k < group.order(); ++k) {
    for (const auto& t : plan.triples) {
      auto a = mi.find(group.elements[k].apply(mu.points[t.source]));
      auto b = ni.find(group.dual[k].apply(nu.points[t.target]));
      if (a == mi.end() || b == ni.end())
        throw Error(ErrorCode::InvalidArgument, "point clouds are not invariant under the group");
      acc[{a->second, b->second}] += t.mass * share;
    }
  }
  TransportPlan out;
  for (auto& [key, mass] : acc) out.triples.push_back({key.first, key.second, mass});
  out.cost_value = detail::plan_cost(out, mu, nu);
  return out;
}

struct CycleViolation {
  std::vector<std::size_t> pairs;  // indices into plan.triples, in cycle order
  Rational excess;                 // sum c(m_a, n_a) - sum c(m_{a+1}, n_a) > 0
};

struct CycleVerdict {
  std::size_t max_length = 0;
  bool exhaustive = true;  // false: certified for all lengths by support potentials
  std::vector<CycleViolation> violations;

  bool pass() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;
inline constexpr std::size_t kMaxWitnesses = 16;

namespace detail {

inline CycleVerdict cycles_exhaustive(const TransportPlan& plan, const ScaledCosts& costs, std::size_t k) {
  CycleVerdict v;
  v.max_length = k;
  const std::size_t s = plan.triples.size();
  const Rational scale(costs.scale());
  std::vector<std::size_t> cyc;
  std::vector<bool> used(s, false);
  // Cycles are enumerated with their smallest pair first, so each rotation is seen once.
  std::function<void(std::int64_t)> extend = [&](std::int64_t acc) {
    const auto& last = plan.triples[cyc.back()];
    if (cyc.size() >= 2) {
      const auto& head = plan.triples[cyc.front()];
      const std::int64_t close = acc + costs(last.source, last.target) - costs(head.source, last.target);
      if (close > 0 && v.violations.size() < kMaxWitnesses) v.violations.push_back({cyc, Rational(close) / scale});
    }
    if (cyc.size() == k) return;
    for (std::size_t q = cyc.front() + 1; q < s; ++q) {
      if (used[q]) continue;
      const auto& next = plan.triples[q];
      used[q] = true;
      cyc.push_back(q);
      extend(acc + costs(last.source, last.target) - costs(next.source, last.target));
      cyc.pop_back();
      used[q] = false;
    }
  };
  for (std::size_t p = 0; p < s; ++p) {
    cyc = {p};
    used[p] = true;
    extend(0);
    used[p] = false;
  }
  return v;
}

/// Potentials tight on the support, one gauge per support component, with the gauges
/// fixed by Bellman-Ford on the component graph. Their existence is equivalent to
/// c-cyclical monotonicity for cycles of every length.
inline CycleVerdict cycles_by_potentials(const TransportPlan& plan, const ScaledCosts& costs, std::size_t n1,
                                         std::size_t n2, std::size_t k) {
  CycleVerdict v;
  v.max_length = k;
  v.exhaustive = false;
  const Rational scale(costs.scale());
  const std::size_t nodes = n1 + n2;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);  // (neighbour, triple)
  for (std::size_t t = 0; t < plan.triples.size(); ++t) {
    const auto& tr = plan.triples[t];
    adj[tr.source].push_back({n1 + tr.target, t});
    adj[n1 + tr.target].push_back({tr.source, t});
  }
  std::vector<std::int64_t> pot(nodes, 0);  // phi on sources, psi on targets
  std::vector<std::size_t> comp(nodes, SIZE_MAX), via(nodes, SIZE_MAX), parent(nodes, SIZE_MAX);
  std::size_t ncomp = 0;
  auto path_to_root = [&](std::size_t x) {
    std::vector<std::size_t> p;
    for (; via[x] != SIZE_MAX; x = parent[x]) p.push_back(via[x]);
    return p;
  };
  for (std::size_t r = 0; r < nodes; ++r) {
    if (comp[r] != SIZE_MAX) continue;
    std::queue<std::size_t> q;
    q.push(r);
    comp[r] = ncomp;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (auto [y, t] : adj[x]) {
        const auto& tr = plan.triples[t];
        const std::int64_t c = costs(tr.source, tr.target);
        const std::int64_t want = c - pot[x];
        if (comp[y] == SIZE_MAX) {
          comp[y] = ncomp;
          pot[y] = want;
          via[y] = t;
          parent[y] = x;
          q.push(y);
        } else if (pot[y] != want && x < y && v.violations.size() < kMaxWitnesses) {
          auto a = path_to_root(x), b = path_to_root(y);
          a.insert(a.end(), b.rbegin(), b.rend());
          a.push_back(t);
          const std::int64_t d = pot[y] - want;
          v.violations.push_back({a, Rational(d < 0 ? -d : d) / scale});
        }
      }
    }
    ++ncomp;
  }
  if (!v.violations.empty()) return v;

  // slack(c, c') = min over sources in c and targets in c' of cost - phi - psi.
  const std::int64_t inf = INT64_MAX;
  std::vector<std::int64_t> slack(ncomp * ncomp, inf);
  std::vector<std::pair<std::size_t, std::size_t>> arg(ncomp * ncomp);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const std::int64_t sl = costs(i, j) - pot[i] - pot[n1 + j];
      const std::size_t key = comp[i] * ncomp + comp[n1 + j];
      if (sl < slack[key]) {
        slack[key] = sl;
        arg[key] = {i, j};
      }
    }
  for (std::size_t c = 0; c < ncomp; ++c) {
    const std::size_t key = c * ncomp + c;
    if (slack[key] < 0 && v.violations.size() < kMaxWitnesses) {
      auto [i, j] = arg[key];
      auto a = path_to_root(i), b = path_to_root(n1 + j);
      a.insert(a.end(), b.rbegin(), b.rend());
      v.violations.push_back({a, Rational(-slack[key]) / scale});
    }
  }
  if (!v.violations.empty()) return v;

  // Gauges t_c (phi += t, psi -= t) need t_c - t_c' <= slack(c, c').
  std::vector<__int128> t(ncomp, 0);
  std::vector<std::size_t> pred(ncomp, SIZE_MAX);
  std::size_t last = SIZE_MAX;
  for (std::size_t round = 0; round <= ncomp; ++round) {
    last = SIZE_MAX;
    for (std::size_t c = 0; c < ncomp; ++c)
      for (std::size_t d = 0; d < ncomp; ++d) {
        const std::int64_t w = slack[c * ncomp + d];
        if (c == d || w == inf) continue;
        if (t[d] + w < t[c]) {
          t[c] = t[d] + w;
          pred[c] = d;
          last = c;
        }
      }
    if (last == SIZE_MAX) return v;
  }
  for (std::size_t i = 0; i < ncomp; ++i) last = pred[last];
  __int128 weight = 0;
  std::size_t c = last;
  do {
    weight += slack[c * ncomp + pred[c]];
    c = pred[c];
  } while (c != last);
  v.violations.push_back({{}, Rational(Integer(static_cast<long long>(-weight))) / scale});
  return v;
}

}  // namespace detail

/// No cyclic reassignment of at most k support pairs lowers the cost. Cycles are
/// enumerated exhaustively while the number of sequences stays within `budget`;
/// larger supports are certified for all cycle lengths by support potentials.
inline CycleVerdict check_cyclical_monotonicity(const TransportPlan& plan, const WeightedPointCloud& mu,
                                                const WeightedPointCloud& nu, std::size_t k,
                                                std::size_t budget = kDefaultCycleBudget) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "cycle length must be at least 2");
  detail::ScaledCosts costs(mu, nu);
  const std::size_t s = plan.triples.size();
  double sequences = 0;
  for (std::size_t l = 2; l <= k; ++l) sequences += std::pow(static_cast<double>(s), static_cast<double>(l));
  if (sequences <= static_cast<double>(budget)) return detail::cycles_exhaustive(plan, costs, k);
  if (static_cast<double>(mu.size()) * static_cast<double>(nu.size()) > 1e9)
    throw Error(ErrorCode::CombinatorialBudgetExceeded, "support too large for cycle certification");
  return detail::cycles_by_potentials(plan, costs, mu.size(), nu.size(), k);
}

struct ReflectionWitness {
  std::size_t triple;
  std::size_t root;  // index into RootSystem::roots()
  Rational product;  // <m, coroot> <root, n> < 0
};

struct ReflectionVerdict {
  std::size_t checked = 0;
  std::vector<ReflectionWitness> witnesses;

  bool pass() const { return witnesses.empty(); }
};

/// Sign of <m, alpha^vee><alpha, n> on every support pair and positive root.
inline ReflectionVerdict check_reflection_sign(const TransportPlan& plan, const WeightedPointCloud& mu,
                                               const WeightedPointCloud& nu, const RootSystem& r) {
  ReflectionVerdict v;
  detail::ScaledCosts scaled(mu, nu);
  std::vector<std::size_t> pos;
  std::vector<std::vector<std::int64_t>> a, av;
  for (std::size_t i = 0; i < r.roots().size(); ++i)
    if (r.is_positive(i)) {
      pos.push_back(i);
      a.push_back(to_int64(r.roots()[i]));
      av.push_back(to_int64(r.coroots()[i]));
    }
  auto dot = [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    __int128 s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += static_cast<__int128>(x[k]) * y[k];
    return s;
  };
  for (std::size_t t = 0; t < plan.triples.size(); ++t) {
    const auto& tr = plan.triples[t];
    for (std::size_t k = 0; k < pos.size(); ++k) {
      ++v.checked;
      const __int128 x = dot(scaled.source(tr.source), av[k]);
      const __int128 y = dot(a[k], scaled.target(tr.target));
      if (((x < 0 && y > 0) || (x > 0 && y < 0)) && v.witnesses.size() < kMaxWitnesses) {
        const auto& root = r.roots()[pos[k]];
        const auto& coroot = r.coroots()[pos[k]];
        v.witnesses.push_back({t, pos[k], bracket(mu.points[tr.source], coroot) * bracket(root, nu.points[tr.target])});
      }
    }
  }
  return v;
}

struct SupportWitness {
  std::size_t triple;
  Rational mass;
};

struct SupportVerdict {
  Rational offending_mass = 0;
  std::vector<SupportWitness> witnesses;

  bool pass() const { return offending_mass == 0; }
};

/// Mass of the plan outside the union of Star(m) x tau_m over the vertices m.
inline SupportVerdict check_stability_support(const TransportPlan& plan, const WeightedPointCloud& mu,
                                              const WeightedPointCloud& nu, const Polytope& delta) {
  if (!is_reflexive(delta)) throw Error(ErrorCode::NotReflexive, "stability needs a reflexive polytope");
  const auto& vs = delta.vertices();
  std::unordered_map<std::size_t, detail::Bitset> star, tau;
  auto star_of = [&](std::size_t i) -> const detail::Bitset& {
    auto it = star.find(i);
    if (it != star.end()) return it->second;
    detail::Bitset b(vs.size());
    for (auto f : delta.facets_containing(mu.points[i]))
      for (auto v : delta.facet_vertices(f)) b.set(v);
    return star.emplace(i, std::move(b)).first->second;
  };
  auto tau_of = [&](std::size_t j) -> const detail::Bitset& {
    auto it = tau.find(j);
    if (it != tau.end()) return it->second;
    detail::Bitset b(vs.size());
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (bracket(vs[v], nu.points[j]) == 1) b.set(v);
    return tau.emplace(j, std::move(b)).first->second;
  };
  SupportVerdict v;
  for (std::size_t t = 0; t < plan.triples.size(); ++t) {
    const auto& tr = plan.triples[t];
    if (star_of(tr.source).intersects(tau_of(tr.target))) continue;
    v.offending_mass += tr.mass;
    if (v.witnesses.size() < kMaxWitnesses) v.witnesses.push_back({t, tr.mass});
  }
  return v;
}

namespace detail {

/// Indices k with x in the closed chamber elements[k](C+) on the given side.
class ChamberLocator {
 public:
  ChamberLocator(const RootSystem& r, const WeylGroup& w, Side side) : r_(r), side_(side) {
    const auto& elements = side == Side::M ? w.elements : w.dual;
    for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i], i);
  }

  std::vector<std::size_t> operator()(const RationalVector& x) {
    auto dom = r_.dominant_representative(x, side_);
    std::vector<std::size_t> fixed;
    for (std::size_t j = 0; j < r_.rank(); ++j) {
      Rational val = side_ == Side::M ? bracket(dom.point, r_.simple_coroot(j)) : bracket(r_.simple_root(j), dom.point);
      if (val == 0) fixed.push_back(j);
    }
    auto it = stabilizers_.find(fixed);
    if (it == stabilizers_.end()) {
      auto sub = r_.parabolic_subgroup(fixed);
      it = stabilizers_.emplace(fixed, side_ == Side::M ? sub.elements : sub.dual).first;
    }
    const UnimodularMap back = dom.map.inverse();
    std::vector<std::size_t> out;
    for (const auto& s : it->second) out.push_back(index_.at(back * s));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const RootSystem& r_;
  Side side_;
  std::unordered_map<UnimodularMap, std::size_t, UnimodularMapHash> index_;
  std::map<std::vector<std::size_t>, std::vector<UnimodularMap>> stabilizers_;
};

}  // namespace detail

/// Mass of the plan on pairs (x, y) with no w such that x is in w(C+_M) and y in
/// w^vee(C+_N).
inline SupportVerdict check_chamber_support(const TransportPlan& plan, const WeightedPointCloud& mu,
                                            const WeightedPointCloud& nu, const WeylPolytopeRecord& rec,
                                            const WeylGroup& w) {
  if (!is_reflexive(rec.polytope)) throw Error(ErrorCode::NotReflexive, "chamber support needs a reflexive polytope");
  detail::ChamberLocator lm(rec.system, w, Side::M), ln(rec.system, w, Side::N);
  std::unordered_map<std::size_t, std::vector<std::size_t>> cm, cn;
  SupportVerdict v;
  for (std::size_t t = 0; t < plan.triples.size(); ++t) {
    const auto& tr = plan.triples[t];
    auto a = cm.find(tr.source);
    if (a == cm.end()) a = cm.emplace(tr.source, lm(mu.points[tr.source])).first;
    auto b = cn.find(tr.target);
    if (b == cn.end()) b = cn.emplace(tr.target, ln(nu.points[tr.target])).first;
    std::vector<std::size_t> common;
    std::set_intersection(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(),
                          std::back_inserter(common));
    if (!common.empty()) continue;
    v.offending_mass += tr.mass;
    if (v.witnesses.size() < kMaxWitnesses) v.witnesses.push_back({t, tr.mass});
  }
  return v;
}

struct CertificationReport {
  int refinement = 0;
  std::size_t group_order = 0;
  std::size_t source_points = 0;
  std::size_t target_points = 0;
  WeightedPointCloud source;
  WeightedPointCloud target;
  TransportPlan plan;  // symmetrized
  KantorovichPotentials potentials;
  Rational cost = 0;
  Rational duality_gap = 0;
  bool potentials_feasible = false;
  bool marginals = false;
  SupportVerdict stability;
  SupportVerdict chamber_support;
  ReflectionVerdict reflection_sign;
  CycleVerdict cyclical_monotonicity;

  bool pass() const {
    return duality_gap == 0 && potentials_feasible && marginals && stability.pass() && chamber_support.pass() &&
           reflection_sign.pass() && cyclical_monotonicity.pass();
  }
};

/// Discretize both boundaries with the Weyl group, solve, symmetrize, and run every check.
inline CertificationReport certify(const WeylPolytopeRecord& rec, int k, std::size_t max_cycle_length = 3,
                                   PivotRule rule = PivotRule::BlockSearch) {
  if (!is_reflexive(rec.polytope)) throw Error(ErrorCode::NotReflexive, "certification needs a reflexive polytope");
  const WeylGroup w = rec.system.weyl_group();
  const Polytope dual = dual_polytope(rec.polytope);
  auto mu = discretize(rec.polytope, k, chamber_group(rec.system, w, Side::M));
  auto nu = discretize(dual, k, chamber_group(rec.system, w, Side::N));
  auto [raw, pot] = solve_ot(mu, nu, rule);

  CertificationReport rep;
  rep.refinement = k;
  rep.group_order = w.order();
  rep.source_points = mu.size();
  rep.target_points = nu.size();
  rep.plan = symmetrize_plan(raw, w, mu, nu);
  rep.potentials = std::move(pot);
  rep.cost = rep.plan.cost_value;
  rep.duality_gap = duality_gap(rep.plan, rep.potentials, mu, nu);
  rep.potentials_feasible = potentials_feasible(rep.plan, rep.potentials, mu, nu);
  rep.marginals = marginals_match(rep.plan, mu, nu);
  rep.stability = check_stability_support(rep.plan, mu, nu, rec.polytope);
  rep.chamber_support = check_chamber_support(rep.plan, mu, nu, rec, w);
  rep.reflection_sign = check_reflection_sign(rep.plan, mu, nu, rec.system);
  rep.cyclical_monotonicity = check_cyclical_monotonicity(rep.plan, mu, nu, max_cycle_length);
  rep.source = std::move(mu);
  rep.target = std::move(nu);
  return rep;
}

}  // namespace weylot
