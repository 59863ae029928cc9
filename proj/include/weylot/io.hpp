#pragma once

// Polytope and point-cloud text files, and JSON reports.

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylot/transport.hpp"

#ifndef WEYLOT_VERSION
#define WEYLOT_VERSION "0.1.0"
#endif

namespace weylot {

inline constexpr const char* kToolName = "weylot";
inline const char* tool_version() { return WEYLOT_VERSION; }

using Json = nlohmann::ordered_json;

/// Header `r c`, then r rows of c integers, after optional `#` comment lines.
struct PolytopeFile {
  std::vector<std::string> comments;  // text after the '#'
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> matrix;

  /// PALP convention (columns are vertices) when r <= 6 and r < c.
  bool column_vertices() const { return rows <= 6 && rows < cols; }

  std::vector<RationalVector> points() const {
    std::vector<RationalVector> out;
    if (column_vertices()) {
      for (std::size_t j = 0; j < cols; ++j) {
        RationalVector v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = Rational(matrix[i][j]);
        out.push_back(std::move(v));
      }
    } else {
      for (const auto& row : matrix) out.push_back(to_rational(row));
    }
    return out;
  }

  std::size_t dimension() const { return column_vertices() ? rows : cols; }

  Polytope polytope() const { return convex_hull(points(), dimension()); }
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

inline Integer parse_integer(const std::string& word) {
  auto q = parse_rational(word);
  if (word.find('/') != std::string::npos || !is_integral(q))
    throw Error(ErrorCode::NonIntegerEntry, "'" + word + "' is not an integer");
  return numerator_of(q);
}

inline std::size_t parse_count(const std::string& word) {
  for (char ch : word)
    if (ch < '0' || ch > '9') throw Error(ErrorCode::MalformedHeader, "'" + word + "' is not a positive integer");
  if (word.empty() || word.size() > 9 || std::stoul(word) == 0)
    throw Error(ErrorCode::MalformedHeader, "'" + word + "' is not a positive integer");
  return std::stoul(word);
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

/// Reads one block starting at `pos`; trailing PALP annotations on the header line
/// (tokens such as `M:10 8`) are ignored.
inline PolytopeFile read_block(const std::vector<std::string>& lines, std::size_t& pos) {
  PolytopeFile f;
  while (pos < lines.size() && (is_blank(lines[pos]) || lines[pos][0] == '#')) {
    if (!is_blank(lines[pos])) f.comments.push_back(lines[pos].substr(1));
    ++pos;
  }
  if (pos == lines.size()) throw Error(ErrorCode::MalformedHeader, "missing header line");
  auto header = split_words(lines[pos++]);
  if (header.size() < 2) throw Error(ErrorCode::MalformedHeader, "header needs two integers");
  if (header.size() > 2 && header[2].find(':') == std::string::npos)
    throw Error(ErrorCode::MalformedHeader, "header has more than two integers");
  f.rows = parse_count(header[0]);
  f.cols = parse_count(header[1]);
  while (f.matrix.size() < f.rows) {
    if (pos == lines.size())
      throw Error(ErrorCode::MalformedHeader, "expected " + std::to_string(f.rows) + " rows, found " +
                                                  std::to_string(f.matrix.size()));
    if (is_blank(lines[pos])) {
      ++pos;
      continue;
    }
    auto words = split_words(lines[pos++]);
    std::vector<Integer> row;
    for (const auto& w : words) row.push_back(parse_integer(w));
    if (row.size() != f.cols)
      throw Error(ErrorCode::MalformedHeader, "row " + std::to_string(f.matrix.size() + 1) + " has " +
                                                  std::to_string(row.size()) + " entries, expected " +
                                                  std::to_string(f.cols));
    f.matrix.push_back(std::move(row));
  }
  return f;
}

inline bool only_blank_from(const std::vector<std::string>& lines, std::size_t pos) {
  for (; pos < lines.size(); ++pos)
    if (!is_blank(lines[pos])) return false;
  return true;
}

}  // namespace detail

inline PolytopeFile read_polytope_file(const std::string& text) {
  auto lines = detail::lines_of(text);
  std::size_t pos = 0;
  auto f = detail::read_block(lines, pos);
  if (!detail::only_blank_from(lines, pos)) throw Error(ErrorCode::MalformedHeader, "unexpected text after the matrix");
  return f;
}

/// Every block of a file holding several polytopes back to back (database dumps).
inline std::vector<PolytopeFile> read_polytope_stream(const std::string& text) {
  auto lines = detail::lines_of(text);
  std::vector<PolytopeFile> out;
  std::size_t pos = 0;
  while (!detail::only_blank_from(lines, pos)) {
    bool comments_only = true;
    for (std::size_t i = pos; i < lines.size() && comments_only; ++i)
      if (!detail::is_blank(lines[i]) && lines[i][0] != '#') comments_only = false;
    if (comments_only) break;
    out.push_back(detail::read_block(lines, pos));
  }
  return out;
}

inline Polytope parse_polytope(const std::string& text) { return read_polytope_file(text).polytope(); }

inline std::string serialize(const PolytopeFile& f) {
  std::string out;
  for (const auto& c : f.comments) out += "#" + c + "\n";
  out += std::to_string(f.rows) + " " + std::to_string(f.cols) + "\n";
  for (const auto& row : f.matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j].str();
    }
    out += '\n';
  }
  return out;
}

/// Canonical file of a lattice polytope: sorted vertices, PALP columns when the
/// orientation rule reads them back that way.
inline PolytopeFile to_polytope_file(const Polytope& p, std::vector<std::string> comments = {}) {
  if (!p.is_lattice()) throw Error(ErrorCode::NotLatticePoint, "polytope has non-integral vertices");
  PolytopeFile f;
  f.comments = std::move(comments);
  const std::size_t d = p.dimension(), n = p.vertices().size();
  const bool columns = d <= 6 && d < n;
  f.rows = columns ? d : n;
  f.cols = columns ? n : d;
  f.matrix.assign(f.rows, std::vector<Integer>(f.cols));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) {
      Integer x = numerator_of(p.vertices()[v][i]);
      if (columns) f.matrix[i][v] = x;
      else f.matrix[v][i] = x;
    }
  return f;
}

inline std::string serialize_polytope(const Polytope& p, std::vector<std::string> comments = {}) {
  return serialize(to_polytope_file(p, std::move(comments)));
}

/// `n d`, then n lines `mass x_1 ... x_d` with rational entries.
inline WeightedPointCloud parse_cloud(const std::string& text) {
  auto lines = detail::lines_of(text);
  std::size_t pos = 0;
  while (pos < lines.size() && (detail::is_blank(lines[pos]) || lines[pos][0] == '#')) ++pos;
  if (pos == lines.size()) throw Error(ErrorCode::MalformedHeader, "missing header line");
  auto header = detail::split_words(lines[pos++]);
  if (header.size() != 2) throw Error(ErrorCode::MalformedHeader, "header needs two integers");
  const std::size_t n = detail::parse_count(header[0]);
  const std::size_t d = detail::parse_count(header[1]);
  WeightedPointCloud c;
  while (c.points.size() < n) {
    if (pos == lines.size()) throw Error(ErrorCode::MalformedHeader, "cloud ends early");
    if (detail::is_blank(lines[pos])) {
      ++pos;
      continue;
    }
    auto words = detail::split_words(lines[pos++]);
    if (words.size() != d + 1) throw Error(ErrorCode::MalformedHeader, "cloud line has wrong length");
    c.masses.push_back(parse_rational(words[0]));
    if (c.masses.back() <= 0) throw Error(ErrorCode::InvalidArgument, "masses must be positive");
    RationalVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = parse_rational(words[i + 1]);
    c.points.push_back(std::move(x));
  }
  if (!detail::only_blank_from(lines, pos)) throw Error(ErrorCode::MalformedHeader, "unexpected text after the cloud");
  c.facets.assign(n, kNoChamber);
  c.chambers.assign(n, kNoChamber);
  return c;
}

inline std::string serialize_cloud(const WeightedPointCloud& c) {
  const std::size_t d = c.points.empty() ? 0 : c.points.front().size();
  std::string out = std::to_string(c.size()) + " " + std::to_string(d) + "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += to_string(c.masses[i]);
    for (const auto& x : c.points[i]) out += " " + to_string(x);
    out += '\n';
  }
  return out;
}

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalError, "sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

// JSON encodings. Rationals are "p/q" strings; a vector is an integer array when all
// its entries are integers and an array of "p/q" strings otherwise.

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  const bool integral = v.is_integral();
  for (const auto& x : v) a.push_back(integral ? to_json(numerator_of(x)) : to_json(x));
  return a;
}

inline Json report_header(const std::string& command, const std::string& input_sha256) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = tool_version();
  j["command"] = command;
  j["input_sha256"] = input_sha256;
  return j;
}

inline Json to_json(const std::optional<WeylDetection>& det) {
  if (!det) return nullptr;
  Json j;
  j["type"] = det->system.label();
  j["group_order"] = to_json(det->group_order);
  j["reflections"] = det->reflection_count;
  j["dominant_vertex"] = to_json(det->dominant_vertex);
  return j;
}

inline Json to_json(const Polytope& p, const ClassificationRecord& rec) {
  Json j;
  j["dimension"] = p.dimension();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  j["vertices"] = vs;
  j["facet_count"] = p.facets().size();
  j["aut_order"] = rec.aut_order;
  j["barycenter_zero"] = rec.barycenter_zero;
  j["reflexive"] = rec.reflexive;
  j["delzant"] = rec.delzant;
  j["weyl"] = to_json(rec.weyl);
  j["dual_weyl"] = rec.reflexive ? to_json(rec.dual_weyl) : Json(nullptr);
  Json vc;
  vc["holds"] = rec.vertex_condition.holds;
  if (rec.vertex_condition.witness)
    vc["witness"] = Json::array({to_json(rec.vertex_condition.witness->first), to_json(rec.vertex_condition.witness->second)});
  else
    vc["witness"] = nullptr;
  j["vertex_condition"] = vc;
  return j;
}

inline Json classification_report(const Polytope& p, const ClassificationRecord& rec, const std::string& input_sha256) {
  Json j = report_header("classify", input_sha256);
  j.update(to_json(p, rec));
  return j;
}

inline Json to_json(const SupportVerdict& v, const TransportPlan& plan, const WeightedPointCloud& mu,
                    const WeightedPointCloud& nu) {
  Json j;
  j["offending_mass"] = to_json(v.offending_mass);
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    const auto& t = plan.triples[w.triple];
    ws.push_back({{"source", to_json(mu.points[t.source])}, {"target", to_json(nu.points[t.target])}, {"mass", to_json(w.mass)}});
  }
  j["witnesses"] = ws;
  return j;
}

inline Json plan_json(const TransportPlan& plan, const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  Json a = Json::array();
  for (const auto& t : plan.triples)
    a.push_back({{"source", to_json(mu.points[t.source])}, {"target", to_json(nu.points[t.target])}, {"mass", to_json(t.mass)}});
  return a;
}

inline Json potentials_json(const KantorovichPotentials& pot, const WeightedPointCloud& mu, const WeightedPointCloud& nu) {
  Json j;
  Json phi = Json::array(), psi = Json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) phi.push_back({{"point", to_json(mu.points[i])}, {"value", to_json(pot.phi[i])}});
  for (std::size_t i = 0; i < nu.size(); ++i) psi.push_back({{"point", to_json(nu.points[i])}, {"value", to_json(pot.psi[i])}});
  j["phi"] = phi;
  j["psi"] = psi;
  return j;
}

inline Json certification_report(const CertificationReport& rep, const WeylPolytopeRecord& rec,
                                 const std::string& input_sha256, bool include_plan = false) {
  const auto& mu = rep.source;
  const auto& nu = rep.target;
  Json j = report_header("certify", input_sha256);
  j["type"] = rec.system.label();
  j["lattice"] = to_string(rec.system.lattice_kind());
  j["weight"] = to_json(rec.weight);
  j["refinement"] = rep.refinement;
  j["group_order"] = rep.group_order;
  j["source_points"] = rep.source_points;
  j["target_points"] = rep.target_points;
  j["support_size"] = rep.plan.triples.size();
  j["pass"] = rep.pass();
  j["cost"] = to_json(rep.cost);
  j["duality_gap"] = to_json(rep.duality_gap);
  j["potentials_feasible"] = rep.potentials_feasible;
  j["marginals"] = rep.marginals;
  j["stability"] = to_json(rep.stability, rep.plan, mu, nu);
  j["chamber_support"] = to_json(rep.chamber_support, rep.plan, mu, nu);

  Json refl;
  refl["checked"] = rep.reflection_sign.checked;
  Json rw = Json::array();
  for (const auto& w : rep.reflection_sign.witnesses) {
    const auto& t = rep.plan.triples[w.triple];
    rw.push_back({{"source", to_json(mu.points[t.source])},
                  {"target", to_json(nu.points[t.target])},
                  {"root", to_json(rec.system.roots()[w.root])},
                  {"product", to_json(w.product)}});
  }
  refl["witnesses"] = rw;
  j["reflection_sign"] = refl;

  Json cyc;
  cyc["max_length"] = rep.cyclical_monotonicity.max_length;
  cyc["method"] = rep.cyclical_monotonicity.exhaustive ? "exhaustive" : "potentials";
  Json cv = Json::array();
  for (const auto& v : rep.cyclical_monotonicity.violations) {
    Json pairs = Json::array();
    for (auto p : v.pairs) {
      const auto& t = rep.plan.triples[p];
      pairs.push_back(Json::array({to_json(mu.points[t.source]), to_json(nu.points[t.target])}));
    }
    cv.push_back({{"pairs", pairs}, {"excess", to_json(v.excess)}});
  }
  cyc["violations"] = cv;
  j["cyclical_monotonicity"] = cyc;
  if (include_plan) {
    j["plan"] = plan_json(rep.plan, mu, nu);
    j["potentials"] = potentials_json(rep.potentials, mu, nu);
  }
  return j;
}

inline std::string write_report(const Json& j) { return j.dump(2) + "\n"; }

inline std::string write_report(const Polytope& p, const ClassificationRecord& rec, const std::string& input_sha256) {
  return write_report(classification_report(p, rec, input_sha256));
}

}  // namespace weylot
