// Command-line driver: build the geometry, certify the graph, export it.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsrg/cliques.hpp"
#include "hsrg/io.hpp"
#include "hsrg/report.hpp"
#include "hsrg/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hsrg::Error("cannot open " + path + " for writing");
  out << text;
}

std::string matrix_names(const hsrg::Mat4& m) {
  std::string s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += (i || j ? " " : "") + std::string(hsrg::to_string(m[i][j]));
  return s;
}

struct Common {
  std::string cache;
  std::uint64_t seed = 1;
  int jobs = 1;

  hsrg::CertifyOptions options() const {
    hsrg::CertifyOptions o;
    o.seed = seed;
    o.jobs = jobs;
    if (!cache.empty() && std::ifstream(cache).good()) o.cache_path = cache;
    return o;
  }
};

int run_build(const Common& c) {
  const auto geo = hsrg::build_geometry(c.jobs);
  const auto g = hsrg::build_graph(geo);
  if (!c.cache.empty()) hsrg::save_cache(c.cache, hsrg::make_cache(geo));
  std::cout << "surface points " << geo.surface.points.size() << "\n"
            << "subquadrangles " << geo.subquadrangles.size() << "\n"
            << "vertices " << geo.vertices.size() << "\n"
            << "edges " << g.edge_count() << "\n";
  if (!c.cache.empty()) std::cout << "cache " << c.cache << "\n";
  return kExitOk;
}

int run_verify(const Common& c, const std::vector<std::string>& claims, bool json, const std::string& out_path) {
  for (const auto& id : claims)
    if (std::find(hsrg::claim_ids().begin(), hsrg::claim_ids().end(), id) == hsrg::claim_ids().end()) {
      std::cerr << "unknown claim '" << id << "'\n";
      return kExitUsage;
    }
  const auto rep = hsrg::certify(c.options(), claims);
  write_output(json ? rep.to_json() : rep.to_text(), out_path);
  return rep.passed() ? kExitOk : kExitFailure;
}

int run_export(const Common& c, const std::string& format, const std::string& out_path) {
  const auto f = hsrg::parse_format(format);
  const auto pipe = hsrg::build_pipeline(c.options());
  write_output(hsrg::export_graph(pipe.graph, f), out_path);
  return kExitOk;
}

int run_cliques(const Common& c, const std::string& csv_path) {
  const auto pipe = hsrg::build_pipeline(c.options());
  auto records = hsrg::enumerate_maximal_cliques(pipe.graph);
  const auto census = hsrg::classify_cliques(records, pipe.geometry);
  std::cout << "maximal cliques " << census.total << "\n";
  for (const auto& [meet, n] : census.by_triple_meet) std::cout << "triple meet " << meet << ": " << n << "\n";
  if (!csv_path.empty()) {
    std::string csv = "u,v,w,triple_meet\n";
    for (const auto& r : records)
      csv += std::to_string(r.vertices[0]) + "," + std::to_string(r.vertices[1]) + "," +
             std::to_string(r.vertices[2]) + "," + std::to_string(r.triple_meet) + "\n";
    write_output(csv, csv_path);
  }
  const bool ok = census.total == 5760 && census.by_triple_meet.size() == 2 && census.by_triple_meet.at(6) == 1440 &&
                  census.by_triple_meet.at(2) == 4320;
  return ok ? kExitOk : kExitFailure;
}

int run_group(const Common& c, int count, bool json) {
  const auto pipe = hsrg::build_pipeline(c.options());
  const auto r = hsrg::analyse_group(pipe.geometry, pipe.graph, c.seed, count);
  std::vector<hsrg::UnitaryCollineation> gens = r.search.linear;
  gens.insert(gens.end(), r.extra_linear.begin(), r.extra_linear.end());
  gens.push_back(r.search.frobenius);
  if (json) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : gens)
      j["generators"].push_back({{"matrix", matrix_names(g.matrix)}, {"semilinear", g.semilinear}});
    j["used_fallback"] = r.search.used_fallback;
    j["linear_order"] = r.linear_order;
    j["full_order"] = r.full_order;
    j["linear_vertex_orbit"] = r.linear_vertex_orbit;
    j["vertex_orbit"] = r.vertex_orbit;
    j["subquadrangle_orbit"] = r.subquadrangle_orbit;
    j["vertex_stabilizer"] = r.vertex_stabilizer;
    j["subquadrangle_stabilizer"] = r.subquadrangle_stabilizer;
    j["automorphisms"] = r.all_automorphisms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << r.seed << "\n";
    for (const auto& g : gens)
      std::cout << "generator " << (g.semilinear ? "semilinear " : "linear ") << matrix_names(g.matrix) << "\n";
    std::cout << "linear order " << r.linear_order << "\n"
              << "full order " << r.full_order << "\n"
              << "vertex orbit (linear) " << r.linear_vertex_orbit << "\n"
              << "subquadrangle orbit " << r.subquadrangle_orbit << "\n"
              << "vertex stabilizer " << r.vertex_stabilizer << "\n"
              << "subquadrangle stabilizer " << r.subquadrangle_stabilizer << "\n"
              << "automorphisms " << (r.all_automorphisms ? "yes" : "no") << "\n";
  }
  const bool ok = r.all_automorphisms && r.linear_vertex_orbit == 216 && r.linear_order == 25920 &&
                  r.full_order == 51840 && r.vertex_stabilizer == 240 && r.subquadrangle_stabilizer == 1440;
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian-surface construction and certification of the SRG(216, 40, 4, 8)", "hsrg"};
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&](CLI::App* sub, bool seed) {
    sub->add_option("--cache", common.cache, "Geometry cache file (read if present; written by build)");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (seed) sub->add_option("--seed", common.seed, "Seed for the unitary generator search");
  };

  auto* build = app.add_subcommand("build", "Enumerate the geometry and optionally write the cache");
  add_common(build, false);

  bool all = false;
  bool json = false;
  std::vector<std::string> claims;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run certification claims; exit 1 if any fails");
  add_common(verify, true);
  verify->add_flag("--all", all, "Run every claim (default when no --claim is given)");
  verify->add_option("--claim", claims, "Run only this claim id (repeatable)");
  verify->add_flag("--json", json, "Machine-readable report");
  verify->add_option("-o,--output", out_path, "Write the report here instead of stdout");

  std::string format;
  auto* exp = app.add_subcommand("export", "Write the graph as graph6, dimacs, edge-csv or json");
  add_common(exp, false);
  exp->add_option("--format", format, "graph6 | dimacs | edge-csv | json")->required();
  exp->add_option("-o,--output", out_path, "Output file (stdout when omitted)");

  std::string csv_path;
  auto* cliques = app.add_subcommand("cliques", "Maximal clique census");
  add_common(cliques, false);
  cliques->add_option("--csv", csv_path, "Also write every clique with its triple meet");

  int count = 2;
  auto* group = app.add_subcommand("group", "Unitary group action, orders and stabilizers");
  add_common(group, true);
  group->add_option("--count", count, "Random linear generators to start from")->check(CLI::Range(2, 64));
  group->add_flag("--json", json, "Machine-readable output");

  auto* report = app.add_subcommand("report", "Full certification report (same as verify --all)");
  add_common(report, true);
  report->add_flag("--json", json, "Machine-readable report");
  report->add_option("-o,--output", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*build) return run_build(common);
    if (*verify) return run_verify(common, all ? std::vector<std::string>{} : claims, json, out_path);
    if (*exp) return run_export(common, format, out_path);
    if (*cliques) return run_cliques(common, csv_path);
    if (*group) return run_group(common, count, json);
    if (*report) return run_verify(common, {}, json, out_path);
  } catch (const hsrg::UnsupportedFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
