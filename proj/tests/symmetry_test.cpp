#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "weylot/symmetry.hpp"

namespace weylot {
namespace {

using testing::hull;
using testing::vec;

std::set<std::vector<std::int64_t>> entries(const std::vector<UnimodularMap>& g) {
  std::set<std::vector<std::int64_t>> s;
  for (const auto& m : g) s.insert(m.entries());
  return s;
}

TEST(AutomorphismGroup, MatchesPermutationOracle) {
  struct Case {
    Polytope p;
    std::size_t order;
  };
  std::vector<Case> cases = {{testing::square(), 8},
                             {testing::cube(), 48},
                             {testing::hexagon(), 12},
                             {testing::small_triangle(), 6},
                             {testing::octahedron(), 48},
                             {testing::segment(), 2},
                             {hull({{1, 0}, {-1, 0}, {0, 1}, {0, -2}}), 2}};
  for (const auto& c : cases) {
    auto g = automorphism_group(c.p);
    EXPECT_EQ(g.size(), c.order);
    EXPECT_EQ(entries(g), oracle::automorphisms_by_permutation(c.p.vertices()));
  }
}

TEST(AutomorphismGroup, RationalPolytope) {
  auto dual = dual_polytope(testing::octagon());
  EXPECT_EQ(automorphism_group(dual).size(), 8u);
}

TEST(AutomorphismGroup, GroupAxioms) {
  for (const auto& p : {testing::cube(), testing::hexagon(), testing::p2_triangle()}) {
    auto g = automorphism_group(p);
    std::set<UnimodularMap> s(g.begin(), g.end());
    EXPECT_TRUE(s.count(UnimodularMap::identity(p.dimension())));
    for (const auto& a : g) {
      EXPECT_TRUE(s.count(a.inverse()));
      for (const auto& b : g) EXPECT_TRUE(s.count(a * b));
    }
  }
}

TEST(AutomorphismGroup, CapIsEnforced) {
  setenv("WEYLOT_ORBIT_CAP", "10", 1);
  try {
    automorphism_group(testing::cube());
    ADD_FAILURE() << "expected GroupCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupCapExceeded);
  }
  unsetenv("WEYLOT_ORBIT_CAP");
}

TEST(UnimodularEquivalent, HexagonAndItsDual) {
  auto hex = testing::hexagon();
  auto dual = dual_polytope(hex);
  auto m = unimodular_equivalent(hex, dual);
  ASSERT_TRUE(m.has_value());
  std::set<RationalVector> image;
  for (const auto& v : hex.vertices()) image.insert(m->apply(v));
  EXPECT_EQ(image, std::set<RationalVector>(dual.vertices().begin(), dual.vertices().end()));
  EXPECT_EQ(std::abs(m->determinant()), 1);
}

TEST(UnimodularEquivalent, SquareAndDiamondDiffer) {
  EXPECT_FALSE(unimodular_equivalent(testing::square(), testing::diamond()).has_value());
}

TEST(UnimodularEquivalent, SelfIsIdentity) {
  auto m = unimodular_equivalent(testing::cube(), testing::cube());
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, UnimodularMap::identity(3));
}

TEST(UnimodularEquivalent, ShearedCopy) {
  UnimodularMap shear(3, {1, 1, 0, 0, 1, 2, 0, 0, 1});
  auto oct = testing::octahedron();
  std::vector<RationalVector> image;
  for (const auto& v : oct.vertices()) image.push_back(shear.apply(v));
  EXPECT_TRUE(unimodular_equivalent(oct, convex_hull(image, 3)).has_value());
  EXPECT_FALSE(unimodular_equivalent(oct, testing::cube()).has_value());
}

// Reflections in the oracle group: involutions A with rank(A - I) = 1.
std::size_t oracle_reflection_count(const Polytope& p) {
  const std::size_t d = p.dimension();
  std::size_t count = 0;
  for (const auto& e : oracle::automorphisms_by_permutation(p.vertices())) {
    RationalMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = e[i * d + j] - (i == j ? 1 : 0);
    if (rank(a) == 1 && e != UnimodularMap::identity(d).entries()) {
      RationalMatrix sq = a * a;  // (A - I)^2 = -2 (A - I) for a reflection
      bool involution = true;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) involution = involution && sq(i, j) == -2 * a(i, j);
      count += involution;
    }
  }
  return count;
}

TEST(LatticeReflections, CountsMatchOracle) {
  for (const auto& p : {testing::square(), testing::diamond(), testing::hexagon(), testing::cube(),
                        testing::octahedron(), testing::small_triangle(), testing::p2_triangle(),
                        testing::segment(), hull({{1, 0}, {-1, 0}, {0, 1}, {0, -2}})}) {
    auto refl = lattice_reflections(p);
    EXPECT_EQ(refl.size(), oracle_reflection_count(p));
    for (const auto& r : refl) {
      EXPECT_EQ(bracket(r.root, r.coroot), 2);
      EXPECT_TRUE(r.coroot.is_integral());
    }
  }
}

TEST(LatticeReflections, SquareRootsAreB2) {
  auto refl = lattice_reflections(testing::square());
  std::set<RationalVector> roots;
  for (const auto& r : refl) roots.insert(r.root);
  EXPECT_EQ(roots, (std::set<RationalVector>{vec({0, 1}), vec({1, 0}), vec({1, 1}), vec({1, -1})}));
}

TEST(LatticeReflections, DualSideReflectionIsTranspose) {
  auto p = testing::hexagon();
  auto dual = dual_polytope(p);
  for (const auto& r : lattice_reflections(p))
    for (const auto& n : dual.vertices()) {
      EXPECT_TRUE(dual.vertex_index(r.apply_dual(n)).has_value());
      for (const auto& m : p.vertices()) EXPECT_EQ(bracket(r.apply(m), n), bracket(m, r.apply_dual(n)));
    }
}

}  // namespace
}  // namespace weylot
