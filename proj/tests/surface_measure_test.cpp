#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "systems.hpp"
#include "weylot/surface_measure.hpp"
#include "weylot/weyl.hpp"

namespace weylot {
namespace {

using testing::vec;

std::map<RationalVector, Rational> as_map(const WeightedPointCloud& c) {
  std::map<RationalVector, Rational> m;
  for (std::size_t i = 0; i < c.size(); ++i) m[c.points[i]] += c.masses[i];
  return m;
}

TEST(SurfaceMeasure, Examples) {
  auto sq = surface_measure(testing::square());
  EXPECT_EQ(sq.total, 8);
  for (const auto& m : sq.facet_masses) EXPECT_EQ(m, 2);
  auto cube = surface_measure(testing::cube());
  EXPECT_EQ(cube.total, 24);
  for (const auto& m : cube.facet_masses) EXPECT_EQ(m, 4);
  auto oct = surface_measure(testing::octahedron());
  EXPECT_EQ(oct.total, 4);
  for (const auto& m : oct.facet_masses) EXPECT_EQ(m, Rational(1, 2));
}

TEST(SurfaceMeasure, ReflexiveTotalIsConeVolume) {
  for (const auto& p : {testing::square(), testing::diamond(), testing::hexagon(), testing::p2_triangle(),
                        testing::small_triangle(), testing::cube(), testing::octahedron(),
                        mr_family(1, 3).polytope, mr_family(3, 3).polytope}) {
    ASSERT_TRUE(is_reflexive(p));
    EXPECT_EQ(surface_measure(p).total, Rational(static_cast<long>(p.dimension())) * lattice_volume(p));
  }
}

TEST(Discretize, Segment) {
  auto a1 = build_root_system("A1");
  for (int k : {0, 1, 3}) {
    auto plain = as_map(discretize(testing::segment(), k));
    auto sym = as_map(discretize(testing::segment(), k, chamber_group(a1, Side::M)));
    std::map<RationalVector, Rational> expected{{vec({-1}), Rational(1, 2)}, {vec({1}), Rational(1, 2)}};
    EXPECT_EQ(plain, expected);
    EXPECT_EQ(sym, expected);
  }
}

TEST(Discretize, SquareUnitSegments) {
  std::map<RationalVector, Rational> expected;
  for (int s : {-1, 1})
    for (int t : {-1, 1}) {
      expected[RationalVector{Rational(s), Rational(t, 2)}] = Rational(1, 8);
      expected[RationalVector{Rational(t, 2), Rational(s)}] = Rational(1, 8);
    }
  EXPECT_EQ(as_map(discretize(testing::square(), 0)), expected);
  auto b2 = testing::e_coordinates('B', 2);
  auto cloud = discretize(testing::square(), 0, chamber_group(b2, Side::M));
  EXPECT_EQ(as_map(cloud), expected);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    EXPECT_EQ(bracket(cloud.points[i], testing::square().facets()[cloud.facets[i]].normal),
              testing::square().facets()[cloud.facets[i]].offset);
    EXPECT_NE(cloud.chambers[i], kNoChamber);
  }
}

TEST(Discretize, OctahedronCentroids) {
  auto cloud = discretize(testing::octahedron(), 0);
  ASSERT_EQ(cloud.size(), 8u);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    EXPECT_EQ(cloud.masses[i], Rational(1, 8));
    for (const auto& x : cloud.points[i]) EXPECT_EQ(abs(x), Rational(1, 3));
    EXPECT_EQ(cloud.chambers[i], kNoChamber);
  }
}

struct Case {
  Polytope p;
  RootSystem r;
  Side side;
};

std::vector<Case> invariant_cases() {
  auto b2 = testing::e_coordinates('B', 2);
  auto b3 = testing::e_coordinates('B', 3);
  auto a2 = build_root_system("A2");
  auto p2 = mr_family(1, 2);
  return {{testing::square(), b2, Side::M},
          {testing::diamond(), b2, Side::N},
          {testing::cube(), b3, Side::M},
          {testing::octahedron(), b3, Side::N},
          {testing::octahedron(), b3, Side::M},
          {p2.polytope, a2, Side::M},
          {dual_polytope(p2.polytope), a2, Side::N},
          {weyl_polytope(b2, vec({2, 1})).polytope, b2, Side::M}};
}

TEST(Discretize, ExactInvarianceAndNormalization) {
  for (const auto& c : invariant_cases()) {
    auto g = chamber_group(c.r, c.side);
    for (int k : {0, 1, 2}) {
      auto cloud = discretize(c.p, k, g);
      EXPECT_EQ(cloud.total(), 1);
      auto m = as_map(cloud);
      EXPECT_EQ(m.size(), cloud.size());
      for (const auto& w : g.elements) {
        std::map<RationalVector, Rational> image;
        for (const auto& [x, mass] : m) image[w.apply(x)] += mass;
        EXPECT_EQ(image, m);
      }
      for (std::size_t i = 0; i < cloud.size(); ++i) EXPECT_GT(cloud.masses[i], 0);
    }
  }
}

TEST(Discretize, PerFacetMassIsStable) {
  for (const auto& c : invariant_cases()) {
    auto sm = surface_measure(c.p);
    for (int k : {0, 1}) {
      for (bool with_group : {false, true}) {
        auto cloud = with_group ? discretize(c.p, k, chamber_group(c.r, c.side)) : discretize(c.p, k);
        std::vector<Rational> per(c.p.facets().size(), Rational(0));
        for (std::size_t i = 0; i < cloud.size(); ++i) per[cloud.facets[i]] += cloud.masses[i];
        for (std::size_t f = 0; f < per.size(); ++f) EXPECT_EQ(per[f], sm.facet_masses[f] / sm.total);
      }
    }
  }
}

TEST(Discretize, NonInvariantPolytopeRejected) {
  auto b2 = testing::e_coordinates('B', 2);
  EXPECT_THROW(discretize(testing::p2_triangle(), 0, chamber_group(b2, Side::M)), Error);
  EXPECT_THROW(discretize(testing::square(), -1), Error);
}

TEST(ChamberMass, EqualOnInvariantClouds) {
  for (const auto& c : invariant_cases()) {
    auto w = c.r.weyl_group();
    const Rational expected(1, static_cast<long>(w.order()));
    for (int k : {0, 1}) {
      for (bool with_group : {false, true}) {
        auto g = chamber_group(c.r, w, c.side);
        auto cloud = with_group ? discretize(c.p, k, g) : discretize(c.p, k);
        auto m = as_map(cloud);
        bool invariant = std::all_of(g.elements.begin(), g.elements.end(), [&](const UnimodularMap& e) {
          std::map<RationalVector, Rational> image;
          for (const auto& [x, mass] : m) image[e.apply(x)] += mass;
          return image == m;
        });
        if (with_group) {
          EXPECT_TRUE(invariant);
        }
        if (!invariant) continue;
        auto masses = chamber_mass(cloud, c.r, w, c.side);
        ASSERT_EQ(masses.size(), w.order());
        for (const auto& m : masses) EXPECT_EQ(m, expected);
      }
    }
  }
}

TEST(ChamberMass, CubeAndOctahedronAgree) {
  auto b3 = testing::e_coordinates('B', 3);
  auto w = b3.weyl_group();
  auto cube = chamber_mass(discretize(testing::cube(), 1, chamber_group(b3, w, Side::M)), b3, w, Side::M);
  auto oct = chamber_mass(discretize(testing::octahedron(), 1, chamber_group(b3, w, Side::N)), b3, w, Side::N);
  EXPECT_EQ(cube, oct);
  EXPECT_EQ(cube.front(), Rational(1, 48));
}

TEST(ChamberMass, TagsMatchAttribution) {
  auto b2 = testing::e_coordinates('B', 2);
  auto w = b2.weyl_group();
  auto cloud = discretize(testing::square(), 1, chamber_group(b2, w, Side::M));
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto& g = w.elements[cloud.chambers[i]];
    EXPECT_TRUE(b2.in_positive_chamber(g.inverse().apply(cloud.points[i]), Side::M));
  }
}

}  // namespace
}  // namespace weylot
