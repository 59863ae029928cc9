#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "weylot/io.hpp"

namespace {

using namespace weylot;

enum Exit { kSuccess = 0, kCertifiedFailure = 1, kInputError = 2, kResourceCap = 3 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_for(const Error& e) { return e.is_resource_cap() ? kResourceCap : kInputError; }

std::vector<std::int64_t> parse_weight(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto q = parse_rational(item);
    if (!is_integral(q)) throw Error(ErrorCode::NotLatticePoint, "weight coefficients must be integers");
    out.push_back(to_int64(numerator_of(q)));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty weight");
  return out;
}

LatticeKind parse_lattice(const std::string& s) {
  if (s == "root") return LatticeKind::Root;
  if (s == "weight") return LatticeKind::Weight;
  throw Error(ErrorCode::InvalidArgument, "lattice must be root or weight");
}

PivotRule parse_pivot(const std::string& s) {
  if (s == "block") return PivotRule::BlockSearch;
  if (s == "bland") return PivotRule::Bland;
  throw Error(ErrorCode::InvalidArgument, "pivot must be block or bland");
}

WeylPolytopeRecord generate(const std::string& type, const std::string& weight, const std::string& lattice) {
  auto r = build_root_system(type, parse_lattice(lattice));
  auto w = parse_weight(weight);
  if (w.size() != r.rank())
    throw Error(ErrorCode::InvalidArgument, "weight needs " + std::to_string(r.rank()) + " coefficients");
  return weyl_polytope(r, w);
}

std::string dual_text(const Polytope& p) {
  Polytope d = dual_polytope(p);
  if (d.is_lattice()) return serialize_polytope(d);
  std::string out = "# non-lattice dual, rational entries\n";
  out += std::to_string(d.vertices().size()) + " " + std::to_string(d.dimension()) + "\n";
  for (const auto& v : d.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
    out += '\n';
  }
  return out;
}

struct CheckFlags {
  bool reflexive = false, delzant = false, weyl = false, vertex_condition = false, star = false;
  bool any() const { return reflexive || delzant || weyl || vertex_condition || star; }
};

int run_check(const std::string& path, CheckFlags flags) {
  const std::string text = read_file(path);
  const Polytope p = parse_polytope(text);
  if (!flags.any()) flags = {true, true, true, true, true};
  Json j = report_header("check", sha256_hex(text));
  bool ok = true;
  if (flags.reflexive) {
    j["reflexive"] = is_reflexive(p);
    ok = ok && j["reflexive"].get<bool>();
  }
  if (flags.delzant) {
    j["delzant"] = is_delzant(p);
    ok = ok && j["delzant"].get<bool>();
  }
  std::optional<WeylDetection> det;
  if (flags.weyl || flags.star) det = is_weyl_polytope(p);
  if (flags.weyl) {
    j["weyl"] = to_json(det);
    ok = ok && det.has_value();
  }
  if (flags.vertex_condition) {
    auto vc = vertex_condition(p);
    Json v;
    v["holds"] = vc.holds;
    v["witness"] = vc.witness ? Json::array({to_json(vc.witness->first), to_json(vc.witness->second)}) : Json(nullptr);
    j["vertex_condition"] = v;
    ok = ok && vc.holds;
  }
  if (flags.star) {
    Json s;
    if (!det) {
      s["status"] = "fail";
      s["reason"] = "not a Weyl polytope";
      ok = false;
    } else {
      auto verdict = star_containment_check({p, det->system, det->dominant_vertex});
      s["status"] = to_string(verdict.status());
      s["dominant_vertex"] = to_json(det->dominant_vertex);
      for (auto [name, side] : {std::pair{"primal", &verdict.primal}, std::pair{"dual", &verdict.dual}}) {
        Json x;
        x["status"] = to_string(side->status);
        x["regions"] = side->regions;
        x["sampled_regions"] = side->sampled_regions;
        x["witness"] = side->witness ? to_json(*side->witness) : Json(nullptr);
        s[name] = x;
      }
      ok = ok && verdict.pass();
    }
    j["star"] = s;
  }
  j["pass"] = ok;
  std::cout << write_report(j);
  return ok ? kSuccess : kCertifiedFailure;
}

/// One output line per polytope; inputs are processed by a pool of workers and
/// printed in input order.
int run_classify(const std::vector<std::string>& paths, unsigned jobs) {
  struct Item {
    std::string output;
    int code = kSuccess;
  };
  std::vector<Item> results(paths.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < paths.size();) {
      std::string out;
      int code = kSuccess;
      std::string text, hash;
      try {
        text = read_file(paths[i]);
        hash = sha256_hex(text);
        auto blocks = read_polytope_stream(text);
        if (blocks.empty()) throw Error(ErrorCode::MalformedHeader, "no polytope in " + paths[i]);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          Json j = report_header("classify", hash);
          j["input"] = paths[i];
          j["index"] = b;
          try {
            Polytope p = blocks[b].polytope();
            j.update(to_json(p, classify(p)));
          } catch (const Error& e) {
            j["error"] = e.what();
            code = std::max(code, exit_for(e));
          }
          out += j.dump() + "\n";
        }
      } catch (const Error& e) {
        Json j = report_header("classify", hash);
        j["input"] = paths[i];
        j["error"] = e.what();
        out += j.dump() + "\n";
        code = std::max(code, exit_for(e));
      }
      results[i] = {std::move(out), code};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  int code = kSuccess;
  for (const auto& r : results) {
    std::cout << r.output;
    code = std::max(code, r.code);
  }
  return code;
}

int run_certify(const std::string& path, const std::string& type, const std::string& weight,
                const std::string& lattice, int refine, std::size_t cycles, const std::string& pivot, bool plan) {
  const std::string text = read_file(path);
  const Polytope p = parse_polytope(text);
  auto generated = generate(type, weight, lattice);
  auto rec = transport_record(generated, p);
  if (!rec) throw Error(ErrorCode::InvalidArgument, "the file is not the Weyl polytope of " + type + " and the weight");
  auto rep = certify(*rec, refine, cycles, parse_pivot(pivot));
  Json j = certification_report(rep, *rec, sha256_hex(text), plan);
  j["lattice"] = lattice;
  j["omega"] = parse_weight(weight);
  std::cout << write_report(j);
  return rep.pass() ? kSuccess : kCertifiedFailure;
}

int run_ot(const std::string& mu_path, const std::string& nu_path, const std::string& pivot) {
  const std::string a = read_file(mu_path), b = read_file(nu_path);
  auto mu = parse_cloud(a), nu = parse_cloud(b);
  auto [plan, pot] = solve_ot(mu, nu, parse_pivot(pivot));
  Json j = report_header("ot", sha256_hex(sha256_hex(a) + sha256_hex(b)));
  j["source_points"] = mu.size();
  j["target_points"] = nu.size();
  j["cost"] = to_json(plan.cost_value);
  j["duality_gap"] = to_json(duality_gap(plan, pot, mu, nu));
  j["plan"] = plan_json(plan, mu, nu);
  j["potentials"] = potentials_json(pot, mu, nu);
  std::cout << write_report(j);
  return kSuccess;
}

int run_discretize(const std::string& path, int refine, const std::string& type, const std::string& weight,
                   const std::string& lattice, bool dual) {
  const Polytope p = parse_polytope(read_file(path));
  std::optional<ChamberGroup> group;
  if (!type.empty()) {
    auto rec = transport_record(generate(type, weight, lattice), p);
    if (!rec) throw Error(ErrorCode::InvalidArgument, "the file is not the Weyl polytope of " + type + " and the weight");
    group = chamber_group(rec->system, dual ? Side::N : Side::M);
  }
  std::cout << serialize_cloud(discretize(dual ? dual_polytope(p) : p, refine, group));
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflexive Weyl polytopes, integral surface measures and optimal transport"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string type, weight, lattice = "root", pivot = "block";
  int row = 0, rank = 0, refine = 0;
  std::size_t cycles = 3;
  unsigned jobs = 1;
  bool plan = false, dual = false;
  std::string file, file2;
  std::vector<std::string> files;
  CheckFlags flags;

  auto* gen = app.add_subcommand("gen", "Weyl polytope of a root system and weight");
  gen->add_option("--type", type, "root system, e.g. B3 or A1xA2")->required();
  gen->add_option("--weight", weight, "comma-separated coefficients of the fundamental weights")->required();
  gen->add_option("--lattice", lattice, "root or weight")->check(CLI::IsMember({"root", "weight"}));

  auto* family = app.add_subcommand("family", "polytope of a row of the reflexive Weyl table");
  family->add_option("--row", row)->required();
  family->add_option("--rank", rank)->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual polytope");
  dual_cmd->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "individual checks; all of them when no flag is given");
  check->add_option("file", file)->required();
  check->add_flag("--reflexive", flags.reflexive);
  check->add_flag("--delzant", flags.delzant);
  check->add_flag("--weyl", flags.weyl);
  check->add_flag("--vertex-condition", flags.vertex_condition);
  check->add_flag("--star", flags.star);

  auto* classify_cmd = app.add_subcommand("classify", "one JSON line per polytope");
  classify_cmd->add_option("files", files)->required();
  classify_cmd->add_option("--jobs,-j", jobs, "worker threads");

  auto* certify_cmd = app.add_subcommand("certify", "stability certificate for a reflexive Weyl polytope");
  certify_cmd->add_option("file", file)->required();
  certify_cmd->add_option("--type", type)->required();
  certify_cmd->add_option("--weight", weight)->required();
  certify_cmd->add_option("--lattice", lattice)->check(CLI::IsMember({"root", "weight"}));
  certify_cmd->add_option("--refine", refine, "barycentric refinement depth")->check(CLI::NonNegativeNumber);
  certify_cmd->add_option("--cycles", cycles, "longest cycle checked for cyclical monotonicity")
      ->check(CLI::Range(2, 64));
  certify_cmd->add_option("--pivot", pivot, "block or bland")->check(CLI::IsMember({"block", "bland"}));
  certify_cmd->add_flag("--plan", plan, "include the plan and potentials");

  auto* ot = app.add_subcommand("ot", "optimal plan between two point clouds");
  ot->add_option("mu", file)->required();
  ot->add_option("nu", file2)->required();
  ot->add_option("--pivot", pivot)->check(CLI::IsMember({"block", "bland"}));

  auto* disc = app.add_subcommand("discretize", "point cloud of the normalized surface measure");
  disc->add_option("file", file)->required();
  disc->add_option("--refine", refine)->check(CLI::NonNegativeNumber);
  disc->add_option("--type", type, "Weyl group making the cloud invariant");
  disc->add_option("--weight", weight);
  disc->add_option("--lattice", lattice)->check(CLI::IsMember({"root", "weight"}));
  disc->add_flag("--dual", dual, "discretize the dual polytope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*gen) {
      auto rec = generate(type, weight, lattice);
      std::cout << serialize_polytope(rec.polytope, {" " + rec.system.label() + " weight " + weight + " " + lattice + " lattice"});
    } else if (*family) {
      auto rec = mr_family(row, rank);
      std::cout << serialize_polytope(rec.polytope, {" row " + std::to_string(row) + " rank " + std::to_string(rank)});
    } else if (*dual_cmd) {
      std::cout << dual_text(parse_polytope(read_file(file)));
    } else if (*check) {
      return run_check(file, flags);
    } else if (*classify_cmd) {
      return run_classify(files, jobs);
    } else if (*certify_cmd) {
      return run_certify(file, type, weight, lattice, refine, cycles, pivot, plan);
    } else if (*ot) {
      return run_ot(file, file2, pivot);
    } else if (*disc) {
      if (!type.empty() && weight.empty()) throw Error(ErrorCode::InvalidArgument, "--type needs --weight");
      return run_discretize(file, refine, type, weight, lattice, dual);
    }
  } catch (const Error& e) {
    std::cerr << "weylot: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "weylot: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}
