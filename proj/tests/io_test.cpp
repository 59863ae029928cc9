#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "systems.hpp"
#include "weylot/io.hpp"

namespace weylot {
namespace {

using testing::vec;

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(WEYLOT_FIXTURE_DIR) + "/" + name + ".txt", std::ios::binary);
  EXPECT_TRUE(in) << name;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<std::string> kFixtures = {"square", "diamond", "hexagon", "p2",      "p2_dual", "cube",
                                            "octahedron", "p3",  "p3_dual", "v3",      "octagon"};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalError;
}

TEST(ParsePolytope, ColumnConvention) {
  EXPECT_EQ(parse_polytope("2 4\n1 1 -1 -1\n1 -1 1 -1\n"), testing::square());
}

TEST(ParsePolytope, RowConvention) {
  EXPECT_EQ(parse_polytope("4 2\n1 1\n1 -1\n-1 1\n-1 -1\n"), testing::square());
}

TEST(ParsePolytope, RowConventionAboveSix) {
  std::string text = "8 7\n";
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) text += (j ? " " : "") + std::to_string(i == j ? 1 : 0);
    text += "\n";
  }
  text += "-1 -1 -1 -1 -1 -1 -1\n";
  auto p = parse_polytope(text);
  EXPECT_EQ(p.dimension(), 7u);
  EXPECT_EQ(p.vertices().size(), 8u);
}

TEST(ParsePolytope, NonIntegerEntry) {
  EXPECT_EQ(code_of([] { parse_polytope("2 4\n1 1 -1 x\n1 -1 1 -1\n"); }), ErrorCode::NonIntegerEntry);
  EXPECT_EQ(code_of([] { parse_polytope("2 4\n1 1 -1 1/2\n1 -1 1 -1\n"); }), ErrorCode::NonIntegerEntry);
  EXPECT_EQ(code_of([] { parse_polytope("2 4\n1 1 -1 1.0\n1 -1 1 -1\n"); }), ErrorCode::NonIntegerEntry);
}

TEST(ParsePolytope, MalformedHeader) {
  for (const char* text : {"", "# only a comment\n", "2\n1 1\n", "0 4\n", "2 -4\n1\n", "2 4 5\n", "a b\n",
                           "2 4\n1 1 -1 -1\n", "2 4\n1 1 -1\n1 -1 1 -1\n", "2 4\n1 1 -1 -1\n1 -1 1 -1\n3\n"})
    EXPECT_EQ(code_of([&] { parse_polytope(text); }), ErrorCode::MalformedHeader) << text;
}

TEST(ParsePolytope, HullErrorsPassThrough) {
  EXPECT_EQ(code_of([] { parse_polytope("2 3\n0 1 2\n0 0 1\n"); }), ErrorCode::OriginNotInterior);
  EXPECT_EQ(code_of([] { parse_polytope("2 3\n-1 0 1\n0 0 0\n"); }), ErrorCode::NotFullDimensional);
}

TEST(ParsePolytope, CommentsWhitespaceAndAnnotations) {
  auto f = read_polytope_file("# first\n#second\n  2   4  \r\n 1 1 -1 -1\r\n\n1 -1 1 -1\n\n");
  EXPECT_EQ(f.comments, (std::vector<std::string>{" first", "second"}));
  EXPECT_EQ(f.polytope(), testing::square());
  EXPECT_EQ(parse_polytope("2 4  M:9 4 N:5 4\n1 1 -1 -1\n1 -1 1 -1\n"), testing::square());
}

TEST(ParsePolytope, Stream) {
  auto blocks = read_polytope_stream("# a\n2 4\n1 1 -1 -1\n1 -1 1 -1\n\n2 3\n1 0 -1\n0 1 -1\n# trailing\n");
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].polytope(), testing::square());
  EXPECT_EQ(blocks[1].polytope(), testing::small_triangle());
}

TEST(Serialize, FixtureFilesAreCanonical) {
  for (const auto& name : kFixtures) {
    const auto text = fixture_text(name);
    auto f = read_polytope_file(text);
    EXPECT_EQ(serialize(f), text) << name;
    Polytope p = f.polytope();
    EXPECT_EQ(serialize_polytope(p, f.comments), text) << name;
    EXPECT_EQ(parse_polytope(serialize_polytope(p)), p) << name;
  }
}

TEST(Serialize, IdempotentOnNonCanonicalInput) {
  const std::string messy = "4 2\n -1  1\n1 1\n0 -1\n-1 -1\n";
  const auto once = serialize_polytope(parse_polytope(messy));
  EXPECT_EQ(once, "2 4\n-1 -1 0 1\n-1 1 -1 1\n");
  EXPECT_EQ(serialize_polytope(parse_polytope(once)), once);
}

TEST(Serialize, RejectsRationalVertices) {
  EXPECT_EQ(code_of([] { serialize_polytope(dual_polytope(testing::octagon())); }), ErrorCode::NotLatticePoint);
}

TEST(Fixtures, MatchTheirWeylPolytopes) {
  struct Case {
    const char* name;
    const char* type;
    std::vector<std::int64_t> omega;
  };
  for (const auto& c : std::vector<Case>{{"square", "B2", {0, 2}},
                                         {"diamond", "B2", {1, 0}},
                                         {"hexagon", "A2", {1, 1}},
                                         {"p2", "A2", {3, 0}},
                                         {"cube", "B3", {0, 0, 2}},
                                         {"octahedron", "B3", {1, 0, 0}},
                                         {"p3", "A3", {4, 0, 0}},
                                         {"v3", "A3", {0, 2, 0}},
                                         {"octagon", "B2", {1, 2}}}) {
    Polytope p = parse_polytope(fixture_text(c.name));
    auto rec = transport_record(weyl_polytope(build_root_system(c.type), c.omega), p);
    ASSERT_TRUE(rec) << c.name;
    EXPECT_EQ(rec->polytope, p);
    EXPECT_EQ(rec->system.orbit(rec->weight), p.vertices());
    EXPECT_TRUE(rec->system.in_positive_chamber(rec->weight, Side::M));
  }
  EXPECT_EQ(parse_polytope(fixture_text("p2_dual")), dual_polytope(parse_polytope(fixture_text("p2"))));
  EXPECT_EQ(parse_polytope(fixture_text("p3_dual")), dual_polytope(parse_polytope(fixture_text("p3"))));
  EXPECT_EQ(parse_polytope(fixture_text("diamond")), dual_polytope(parse_polytope(fixture_text("square"))));
  EXPECT_EQ(parse_polytope(fixture_text("octahedron")), dual_polytope(parse_polytope(fixture_text("cube"))));
}

TEST(TransportRecord, RejectsInequivalentPolytopes) {
  auto rec = weyl_polytope(build_root_system("B2"), std::vector<std::int64_t>{0, 2});
  EXPECT_FALSE(transport_record(rec, testing::diamond()));
  EXPECT_FALSE(transport_record(rec, testing::cube()));
}

TEST(Cloud, RoundTrip) {
  auto c = discretize(testing::square(), 1);
  auto text = serialize_cloud(c);
  auto back = parse_cloud(text);
  EXPECT_EQ(back.points, c.points);
  EXPECT_EQ(back.masses, c.masses);
  EXPECT_EQ(serialize_cloud(back), text);
}

TEST(Cloud, Errors) {
  EXPECT_EQ(code_of([] { parse_cloud("2 1\n1/2 1\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse_cloud("1 1\n1 1 2\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse_cloud("1 1\n0 1\n"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_cloud("1 1\n1 y\n"); }), ErrorCode::NonIntegerEntry);
}

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Report, CubeClassification) {
  const auto text = fixture_text("cube");
  Polytope p = parse_polytope(text);
  auto doc = write_report(p, classify(p), sha256_hex(text));
  auto j = Json::parse(doc);
  EXPECT_EQ(j["tool"], "weylot");
  EXPECT_EQ(j["version"], tool_version());
  EXPECT_EQ(j["input_sha256"], sha256_hex(text));
  EXPECT_EQ(j["aut_order"], 48);
  EXPECT_EQ(j["reflexive"], true);
  EXPECT_EQ(j["delzant"], true);
  EXPECT_EQ(j["weyl"]["type"], "B3");
  EXPECT_EQ(j["weyl"]["group_order"], 48);
  EXPECT_EQ(j["dual_weyl"]["type"], "B3");
  EXPECT_EQ(j["vertex_condition"]["holds"], true);
  EXPECT_TRUE(j["vertex_condition"]["witness"].is_null());
  EXPECT_EQ(doc, write_report(p, classify(p), sha256_hex(text)));

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "command", "input_sha256", "dimension", "vertices",
                                            "facet_count", "aut_order", "barycenter_zero", "reflexive", "delzant",
                                            "weyl", "dual_weyl", "vertex_condition"}));
}

TEST(Report, VertexConditionWitnessIsIntegral) {
  Polytope p = testing::hexagon();
  auto j = classification_report(p, classify(p), "");
  const auto& w = j["vertex_condition"]["witness"];
  ASSERT_TRUE(w.is_array());
  ASSERT_EQ(w.size(), 2u);
  RationalVector m(2), n(2);
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_TRUE(w[0][i].is_number_integer());
    ASSERT_TRUE(w[1][i].is_number_integer());
    m[i] = Rational(w[0][i].get<std::int64_t>());
    n[i] = Rational(w[1][i].get<std::int64_t>());
  }
  EXPECT_EQ(bracket(m, n), 0);
  EXPECT_TRUE(p.vertex_index(m));
  EXPECT_TRUE(dual_polytope(p).vertex_index(n));
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j) if (has_float(x)) return true;
  return false;
}

TEST(Report, CertificationOfTheSquare) {
  auto rec = weyl_polytope(testing::e_coordinates('B', 2), vec({1, 1}));
  auto rep = certify(rec, 0);
  auto j = certification_report(rep, rec, "x", true);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["stability"]["offending_mass"], "0/1");
  EXPECT_EQ(j["chamber_support"]["offending_mass"], "0/1");
  EXPECT_EQ(j["duality_gap"], "0/1");
  EXPECT_EQ(j["cost"], to_string(rep.cost));
  EXPECT_EQ(j["plan"].size(), rep.plan.triples.size());
  EXPECT_EQ(j["potentials"]["phi"].size(), rep.source_points);
  EXPECT_FALSE(has_float(j));
  EXPECT_EQ(write_report(j), write_report(certification_report(certify(rec, 0), rec, "x", true)));
}

TEST(Report, VectorEncoding) {
  EXPECT_EQ(to_json(vec({1, -2})), Json::parse("[1,-2]"));
  RationalVector x(2);
  x[0] = Rational(1);
  x[1] = Rational(-1, 2);
  EXPECT_EQ(to_json(x), Json::parse(R"(["1/1","-1/2"])"));
  EXPECT_EQ(to_json(Rational(0)), "0/1");
}

}  // namespace
}  // namespace weylot
