#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "systems.hpp"
#include "weylot/transport.hpp"

namespace weylot {
namespace {

using testing::vec;

WeightedPointCloud cloud(std::vector<RationalVector> pts, std::vector<Rational> masses) {
  WeightedPointCloud c;
  c.points = std::move(pts);
  c.masses = std::move(masses);
  c.facets.assign(c.points.size(), 0);
  c.chambers.assign(c.points.size(), kNoChamber);
  return c;
}

WeightedPointCloud half_half() { return cloud({vec({-1}), vec({1})}, {Rational(1, 2), Rational(1, 2)}); }

Rational oracle_cost(const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  std::vector<std::vector<Rational>> c(mu.size(), std::vector<Rational>(nu.size()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) c[i][j] = transport_cost(mu.points[i], nu.points[j]);
  return oracle::transport_vertex_minimum(mu.masses, nu.masses, c);
}

WeylPolytopeRecord square_record() { return weyl_polytope(testing::e_coordinates('B', 2), vec({1, 1})); }

TEST(SolveOt, Segment) {
  auto [plan, pot] = solve_ot(half_half(), half_half());
  ASSERT_EQ(plan.triples.size(), 2u);
  EXPECT_EQ(plan.triples[0], (TransportPlan::Triple{0, 0, Rational(1, 2)}));
  EXPECT_EQ(plan.triples[1], (TransportPlan::Triple{1, 1, Rational(1, 2)}));
  EXPECT_EQ(plan.cost_value, -1);
  EXPECT_EQ(pot.phi[0], 0);
  EXPECT_EQ(duality_gap(plan, pot, half_half(), half_half()), 0);
}

TEST(SolveOt, SquareToDiamond) {
  auto mu = discretize(testing::square(), 0);
  auto nu = discretize(testing::diamond(), 0);
  ASSERT_EQ(mu.size(), 8u);
  ASSERT_EQ(nu.size(), 4u);
  for (auto rule : {PivotRule::Bland, PivotRule::BlockSearch}) {
    auto [plan, pot] = solve_ot(mu, nu, rule);
    EXPECT_EQ(plan.cost_value, Rational(-3, 4));
    EXPECT_EQ(plan.cost_value, oracle_cost(mu, nu));
    EXPECT_EQ(plan.triples.size(), 8u);
    for (const auto& t : plan.triples) {
      const auto& x = mu.points[t.source];
      const auto& y = nu.points[t.target];
      EXPECT_EQ(x[0] * y[0] > 0 && x[1] * y[1] > 0, true) << x << " " << y;
    }
    EXPECT_TRUE(marginals_match(plan, mu, nu));
    EXPECT_TRUE(potentials_feasible(plan, pot, mu, nu));
    EXPECT_EQ(duality_gap(plan, pot, mu, nu), 0);
  }
}

TEST(SolveOt, Unbalanced) {
  auto mu = cloud({vec({1})}, {Rational(1)});
  auto nu = cloud({vec({1}), vec({-1})}, {Rational(1, 2), Rational(1, 3)});
  try {
    solve_ot(mu, nu);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnbalancedMasses);
  }
}

WeightedPointCloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::uniform_int_distribution<int> coord(-3, 3), weight(1, 5);
  std::vector<RationalVector> pts;
  std::vector<Rational> w;
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = coord(rng);
    pts.push_back(p);
    w.push_back(weight(rng));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return cloud(std::move(pts), std::move(w));
}

TEST(SolveOt, MatchesVertexEnumerationAndDuality) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 5), dim(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = dim(rng);
    auto mu = random_cloud(rng, size(rng), d);
    auto nu = random_cloud(rng, size(rng), d);
    const Rational expected = oracle_cost(mu, nu);
    for (auto rule : {PivotRule::Bland, PivotRule::BlockSearch}) {
      auto [plan, pot] = solve_ot(mu, nu, rule);
      EXPECT_EQ(plan.cost_value, expected);
      EXPECT_TRUE(marginals_match(plan, mu, nu));
      EXPECT_TRUE(potentials_feasible(plan, pot, mu, nu));
      EXPECT_EQ(duality_gap(plan, pot, mu, nu), 0);
      EXPECT_EQ(pot.phi[detail::lexmin_index(mu.points)], 0);
      // psi is the c-transform of phi.
      for (std::size_t j = 0; j < nu.size(); ++j) {
        std::optional<Rational> m;
        for (std::size_t i = 0; i < mu.size(); ++i) {
          Rational v = transport_cost(mu.points[i], nu.points[j]) - pot.phi[i];
          if (!m || v < *m) m = v;
        }
        EXPECT_EQ(pot.psi[j], *m);
      }
    }
  }
}

TEST(Symmetrize, FixedPointsAndCost) {
  auto a1 = build_root_system("A1");
  auto [plan, pot] = solve_ot(half_half(), half_half());
  auto sym = symmetrize_plan(plan, a1.weyl_group(), half_half(), half_half());
  EXPECT_EQ(sym.triples, plan.triples);

  auto b2 = testing::e_coordinates('B', 2);
  auto w = b2.weyl_group();
  auto mu = discretize(testing::square(), 1, chamber_group(b2, w, Side::M));
  auto nu = discretize(testing::diamond(), 1, chamber_group(b2, w, Side::N));
  auto [p, q] = solve_ot(mu, nu);
  auto s = symmetrize_plan(p, w, mu, nu);
  EXPECT_EQ(s.cost_value, p.cost_value);
  EXPECT_TRUE(marginals_match(s, mu, nu));
  EXPECT_EQ(symmetrize_plan(s, w, mu, nu).triples, s.triples);
  EXPECT_EQ(duality_gap(s, q, mu, nu), 0);
}

TEST(Cycles, Examples) {
  auto [plan, pot] = solve_ot(half_half(), half_half());
  EXPECT_TRUE(check_cyclical_monotonicity(plan, half_half(), half_half(), 2).pass());

  TransportPlan swapped;
  swapped.triples = {{0, 1, Rational(1, 2)}, {1, 0, Rational(1, 2)}};
  auto v = check_cyclical_monotonicity(swapped, half_half(), half_half(), 2);
  ASSERT_FALSE(v.pass());
  EXPECT_TRUE(v.exhaustive);
  EXPECT_EQ(v.violations.front().excess, 4);
  EXPECT_EQ(v.violations.front().pairs.size(), 2u);

  auto by_potentials = check_cyclical_monotonicity(swapped, half_half(), half_half(), 2, 0);
  EXPECT_FALSE(by_potentials.exhaustive);
  EXPECT_FALSE(by_potentials.pass());
  EXPECT_THROW(check_cyclical_monotonicity(plan, half_half(), half_half(), 1), Error);
}

TEST(Cycles, OptimalPlansPassBothWays) {
  auto mu = discretize(testing::square(), 0);
  auto nu = discretize(testing::diamond(), 0);
  auto [plan, pot] = solve_ot(mu, nu);
  auto exhaustive = check_cyclical_monotonicity(plan, mu, nu, 3);
  EXPECT_TRUE(exhaustive.exhaustive);
  EXPECT_TRUE(exhaustive.pass());
  auto certified = check_cyclical_monotonicity(plan, mu, nu, 3, 0);
  EXPECT_FALSE(certified.exhaustive);
  EXPECT_TRUE(certified.pass());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_cloud(rng, 5, 2), b = random_cloud(rng, 4, 2);
    auto [p, q] = solve_ot(a, b);
    EXPECT_TRUE(check_cyclical_monotonicity(p, a, b, 4).pass());
    EXPECT_TRUE(check_cyclical_monotonicity(p, a, b, 4, 0).pass());
    // Reversing the plan's assignment on two support pairs with distinct sources and
    // targets is caught by both methods whenever it raises the cost.
  }
}

TEST(Cycles, DetectsSuboptimalPlans) {
  std::mt19937_64 rng(5);
  int caught = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_cloud(rng, 3, 2), b = random_cloud(rng, 3, 2);
    // Northwest-corner rule: feasible, generally not optimal.
    TransportPlan nw;
    std::vector<Rational> ra = a.masses, rb = b.masses;
    std::size_t i = 0, j = 0;
    while (i < 3 && j < 3) {
      Rational x = std::min(ra[i], rb[j]);
      if (x > 0) nw.triples.push_back({i, j, x});
      ra[i] -= x;
      rb[j] -= x;
      if (ra[i] == 0) ++i;
      else ++j;
    }
    nw.cost_value = detail::plan_cost(nw, a, b);
    auto [opt, pot] = solve_ot(a, b);
    const bool optimal = nw.cost_value == opt.cost_value;
    auto ex = check_cyclical_monotonicity(nw, a, b, 6);
    auto cert = check_cyclical_monotonicity(nw, a, b, 6, 0);
    EXPECT_EQ(ex.pass(), optimal);
    EXPECT_EQ(cert.pass(), optimal);
    caught += optimal ? 0 : 1;
  }
  EXPECT_GT(caught, 0);
}

TEST(ReflectionSign, Examples) {
  auto b2 = testing::e_coordinates('B', 2);
  TransportPlan one;
  one.triples = {{0, 0, Rational(1)}};
  auto mu = cloud({vec({1, 1})}, {Rational(1)});
  auto wall = cloud({RationalVector{Rational(1, 2), Rational(1, 2)}}, {Rational(1)});
  auto bad = cloud({vec({0, -1})}, {Rational(1)});
  EXPECT_TRUE(check_reflection_sign(one, mu, wall, b2).pass());
  auto v = check_reflection_sign(one, mu, bad, b2);
  ASSERT_FALSE(v.pass());
  bool found = false;
  for (const auto& w : v.witnesses)
    if (b2.roots()[w.root] == vec({0, 1})) {
      EXPECT_EQ(w.product, -2);
      found = true;
    }
  EXPECT_TRUE(found);

  auto a1 = build_root_system("A1");
  auto [plan, pot] = solve_ot(half_half(), half_half());
  EXPECT_TRUE(check_reflection_sign(plan, half_half(), half_half(), a1).pass());
}

TEST(Support, SquareToDiamond) {
  auto rec = square_record();
  auto w = rec.system.weyl_group();
  auto mu = discretize(testing::square(), 0, chamber_group(rec.system, w, Side::M));
  auto nu = discretize(testing::diamond(), 0, chamber_group(rec.system, w, Side::N));
  auto [plan, pot] = solve_ot(mu, nu);
  auto sym = symmetrize_plan(plan, w, mu, nu);
  EXPECT_TRUE(check_stability_support(sym, mu, nu, testing::square()).pass());
  EXPECT_TRUE(check_chamber_support(sym, mu, nu, rec, w).pass());

  // (1, 1/2) against (-1/2, -1/2): opposite quadrants.
  mu = discretize(testing::square(), 0);
  nu = discretize(testing::diamond(), 0);
  auto x = std::find(mu.points.begin(), mu.points.end(), RationalVector{Rational(1), Rational(1, 2)});
  auto y = std::find(nu.points.begin(), nu.points.end(), RationalVector{Rational(-1, 2), Rational(-1, 2)});
  ASSERT_NE(x, mu.points.end());
  ASSERT_NE(y, nu.points.end());
  TransportPlan adversarial;
  adversarial.triples = {{static_cast<std::size_t>(x - mu.points.begin()),
                          static_cast<std::size_t>(y - nu.points.begin()), Rational(1, 8)}};
  auto st = check_stability_support(adversarial, mu, nu, testing::square());
  EXPECT_FALSE(st.pass());
  EXPECT_EQ(st.offending_mass, Rational(1, 8));
  ASSERT_EQ(st.witnesses.size(), 1u);
  EXPECT_FALSE(check_chamber_support(adversarial, mu, nu, rec, w).pass());
  EXPECT_THROW(check_stability_support(adversarial, mu, nu, testing::octagon()), Error);
}

TEST(Certify, SquareCubeSimplex) {
  auto b3 = testing::e_coordinates('B', 3);
  std::vector<std::pair<WeylPolytopeRecord, int>> cases = {
      {square_record(), 0},
      {square_record(), 1},
      {weyl_polytope(b3, vec({1, 1, 1})), 0},
      {weyl_polytope(b3, vec({1, 1, 1})), 1},
      {mr_family(1, 3), 0},
  };
  for (const auto& [rec, k] : cases) {
    auto rep = certify(rec, k);
    EXPECT_TRUE(rep.pass()) << rec.polytope.vertices().size() << " k=" << k;
    EXPECT_EQ(rep.duality_gap, 0);
    EXPECT_EQ(rep.stability.offending_mass, 0);
    EXPECT_EQ(rep.chamber_support.offending_mass, 0);
    EXPECT_TRUE(rep.reflection_sign.pass());
    EXPECT_TRUE(rep.cyclical_monotonicity.pass());
    EXPECT_EQ(rep.refinement, k);
  }
  EXPECT_THROW(certify(weyl_polytope(testing::e_coordinates('B', 2), vec({2, 1})), 0), Error);
}

}  // namespace
}  // namespace weylot
