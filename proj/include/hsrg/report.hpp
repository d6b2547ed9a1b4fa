#ifndef HSRG_REPORT_HPP
#define HSRG_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hsrg/cliques.hpp"
#include "hsrg/geometry.hpp"
#include "hsrg/gq.hpp"
#include "hsrg/graph.hpp"
#include "hsrg/io.hpp"
#include "hsrg/symmetry.hpp"

namespace hsrg {

struct ClaimRecord {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::int64_t runtime_ms = 0;
};

struct CertificationReport {
  std::vector<ClaimRecord> claims;

  bool passed() const {
    return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed; });
  }

  /// Key/value text, one block per claim. Runtimes are the only
  /// run-dependent values and can be left out.
  std::string to_text(bool with_runtime = true) const {
    std::ostringstream out;
    for (const auto& c : claims) {
      out << "claim " << c.id << "\n"
          << "  computed: " << c.computed << "\n"
          << "  expected: " << c.expected << "\n";
      if (with_runtime) out << "  runtime_ms: " << c.runtime_ms << "\n";
      out << "  statement: " << c.statement << "\n"
          << "  status: " << (c.passed ? "pass" : "FAIL") << "\n";
    }
    out << "overall: " << (passed() ? "pass" : "FAIL") << "\n";
    return out.str();
  }

  std::string to_json(bool with_runtime = true) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : claims) {
      nlohmann::json j{{"id", c.id},
                       {"statement", c.statement},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"passed", c.passed}};
      if (with_runtime) j["runtime_ms"] = c.runtime_ms;
      arr.push_back(j);
    }
    return nlohmann::json{{"claims", arr}, {"passed", passed()}}.dump(2) + "\n";
  }
};

struct CertifyOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<std::string> cache_path;  // load geometry from here when set
};

/// Everything built once and shared by the claims.
struct Pipeline {
  Geometry geometry;
  SrgGraph graph;
};

inline Pipeline build_pipeline(const CertifyOptions& opt) {
  Pipeline p;
  p.geometry = opt.cache_path ? geometry_from_cache(load_cache(*opt.cache_path)) : build_geometry(opt.jobs);
  p.graph = build_graph(p.geometry);
  return p;
}

/// Every exported byte stream, concatenated in a fixed order.
inline std::string export_bundle(const Geometry& geo, const SrgGraph& g) {
  std::string out = serialize_cache(make_cache(geo));
  for (auto f : {GraphFormat::Graph6, GraphFormat::Dimacs, GraphFormat::EdgeCsv, GraphFormat::Json})
    out += export_graph(g, f);
  return out;
}

namespace detail {

struct ClaimResult {
  std::string computed;
  bool passed;
};

inline ClaimRecord run_claim(std::string id, std::string statement, std::string expected,
                             const std::function<ClaimResult()>& body) {
  ClaimRecord rec{std::move(id), std::move(statement), std::move(expected), "", false, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto r = body();
    rec.computed = r.computed;
    rec.passed = r.passed;
  } catch (const std::exception& e) {
    rec.computed = std::string("error: ") + e.what();
    rec.passed = false;
  }
  rec.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"C01_surface_census",    "C02_gq_axioms",        "C03_subquadrangles",
                                            "C04_twelve_and_ten",     "C05_ovoids",           "C06_srg",
                                            "C07_pair_cases",         "C08_spectrum",         "C09_cliques",
                                            "C10_symmetry",           "C11_determinism"};
  return ids;
}

/// Runs the selected claims (all when `only` is empty) against one pipeline.
inline CertificationReport certify(const CertifyOptions& opt, const std::vector<std::string>& only = {}) {
  using detail::ClaimResult;
  using detail::join;
  const auto& space = ProjectiveSpace::instance();
  CertificationReport rep;
  Pipeline pipe = build_pipeline(opt);
  const Geometry& geo = pipe.geometry;
  const SrgGraph& g = pipe.graph;
  const HermitianSurface& h = geo.surface;
  const auto& subs = geo.subquadrangles;

  const auto want = [&](const std::string& id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };
  const auto add = [&](const std::string& id, std::string statement, std::string expected,
                       const std::function<ClaimResult()>& body) {
    if (want(id)) rep.claims.push_back(detail::run_claim(id, std::move(statement), std::move(expected), body));
  };

  add(claim_ids()[0], "H(3,4) point and line census; lines meet it in 1, 3 or 5 points",
      "points 45 generators 27 tangents 90 secants 240", [&] {
        std::int64_t other = 0;
        for (int n : h.meet_size) other += (n != 1 && n != 3 && n != 5) ? 1 : 0;
        const std::string c = "points " + std::to_string(h.points.size()) + " generators " +
                              std::to_string(h.generators.size()) + " tangents " + std::to_string(h.tangents.size()) +
                              " secants " + std::to_string(h.secants.size());
        return ClaimResult{c, c == "points 45 generators 27 tangents 90 secants 240" && other == 0};
      });

  add(claim_ids()[1], "H(3,4) is a GQ(4,2) and every subquadrangle is a GQ(2,2)", "violations 0", [&] {
    std::vector<PointSet> lines;
    for (int l : h.generators) lines.push_back(space.lines()[l].mask);
    int violations = gq_violation(h.mask, lines, 4, 2) ? 1 : 0;
    for (const auto& w : subs) violations += gq_violation(w.mask, w.generator_masks(), 2, 2) ? 1 : 0;
    return ClaimResult{"violations " + std::to_string(violations), violations == 0};
  });

  add(claim_ids()[2], "36 subquadrangles; pairs meet in 3 or 6 points; 15/20 partners each; 3 per secant",
      "count 36 pairs3 270 pairs6 360 partners 15/20 triples 240x3", [&] {
        std::int64_t p3 = 0, p6 = 0;
        bool partners = true;
        for (const auto& a : subs) {
          int three = 0, six = 0;
          for (const auto& b : subs) {
            if (a.id == b.id) continue;
            const auto pc = classify_pair(h, a, b);
            (pc.kind == PairKind::ThreeOnGenerator ? three : six)++;
            if (a.id < b.id) (pc.kind == PairKind::ThreeOnGenerator ? p3 : p6)++;
          }
          partners = partners && three == 15 && six == 20;
        }
        int triples = 0;
        for (int s : h.secants) triples += triple_through_secant(h, subs, s).size() == 3 ? 1 : 0;
        const std::string c = "count " + std::to_string(subs.size()) + " pairs3 " + std::to_string(p3) + " pairs6 " +
                              std::to_string(p6) + " partners " + (partners ? "15/20" : "irregular") + " triples " +
                              std::to_string(triples) + "x3";
        return ClaimResult{c, c == "count 36 pairs3 270 pairs6 360 partners 15/20 triples 240x3"};
      });

  add(claim_ids()[3], "subquadrangles meeting both members of a pair in six points: 12 or 10",
      "3-point pairs 270 all 12; 6-point pairs 360 all 10", [&] {
        std::int64_t ok3 = 0, ok6 = 0, bad = 0;
        for (int a = 0; a < static_cast<int>(subs.size()); ++a)
          for (int b = a + 1; b < static_cast<int>(subs.size()); ++b) {
            const int m = meet_size(subs[a], subs[b]);
            const int n = common_six_meet_count(subs, a, b);
            if (m == 3 && n == 12) ++ok3;
            else if (m == 6 && n == 10) ++ok6;
            else ++bad;
          }
        const std::string c = "3-point pairs " + std::to_string(ok3) + " all 12; 6-point pairs " +
                              std::to_string(ok6) + " all 10";
        return ClaimResult{c + (bad ? "; mismatches " + std::to_string(bad) : ""),
                           bad == 0 && ok3 == 270 && ok6 == 360};
      });

  add(claim_ids()[4], "6 ovoids per subquadrangle, 216 in all; same-parent ovoids share 1 point; 60 pairs each",
      "vertices 216 per-parent 6 same-parent-meet 1 pairs 60", [&] {
        bool per_parent = true, meet_one = true, pairs_ok = true;
        for (const auto& w : subs) {
          std::span<const OvoidVertex> ovs(geo.vertices.data() + w.id * kOvoidsPerSubquadrangle,
                                           kOvoidsPerSubquadrangle);
          per_parent = per_parent && std::all_of(ovs.begin(), ovs.end(), [&](const auto& o) {
                         return o.parent == w.id && is_ovoid_of(w, o.mask);
                       });
          for (std::size_t i = 0; i < ovs.size(); ++i)
            for (std::size_t j = i + 1; j < ovs.size(); ++j)
              meet_one = meet_one && (ovs[i].mask & ovs[j].mask).count() == 1;
          int valid = 0;
          for (std::size_t i = 0; i < w.points.size(); ++i)
            for (std::size_t j = i + 1; j < w.points.size(); ++j) {
              if (joined_by_generator(w, w.points[i], w.points[j])) continue;
              ++valid;
              ovoid_through_pair(w, ovs, w.points[i], w.points[j]);
            }
          pairs_ok = pairs_ok && valid == 60;
        }
        const std::string c = "vertices " + std::to_string(geo.vertices.size()) + " per-parent " +
                              (per_parent ? "6" : "bad") + " same-parent-meet " + (meet_one ? "1" : "bad") +
                              " pairs " + (pairs_ok ? "60" : "bad");
        return ClaimResult{c, c == "vertices 216 per-parent 6 same-parent-meet 1 pairs 60"};
      });

  add(claim_ids()[5], "Gamma is strongly regular: A^2 + 4A - 32I = 8J", "srg 216 40 4 8", [&] {
    const auto p = certify_srg(g, opt.jobs);
    const std::string c = "srg " + join({p.v, p.k, p.lambda, p.mu});
    return ClaimResult{c, p == SrgParams{216, 40, 4, 8} && g.edge_count() == 4320};
  });

  add(claim_ids()[6], "pair cases by |W^W'|: 6 -> adjacent with one common point or disjoint/two; 3 -> 0/1; 15 -> 1",
      "pairs 23220 violations 0", [&] {
        const auto r = pair_case_analysis(g, geo);
        return ClaimResult{"pairs " + std::to_string(r.pairs.size()) + " violations 0", r.pairs.size() == 23220};
      });

  add(claim_ids()[7], "eigenvalues 40, 4, -8 with multiplicities from rank(A - 4I)", "multiplicities 1 140 75", [&] {
    const auto p = certify_srg(g, opt.jobs);
    const auto sc = spectrum_certificate(g, p);
    const std::string c = "multiplicities " + join({sc.multiplicities[0], sc.multiplicities[1], sc.multiplicities[2]});
    return ClaimResult{c, c == "multiplicities 1 140 75" && sc.eigenvalues == std::array<int, 3>{40, 4, -8}};
  });

  add(claim_ids()[8], "maximal cliques are triangles: 1440 with triple meet 6, 4320 with triple meet 2",
      "meet6 1440 meet2 4320 total 5760", [&] {
        auto cl = enumerate_maximal_cliques(g);
        const auto census = classify_cliques(cl, geo);
        const auto get = [&](int k) {
          auto it = census.by_triple_meet.find(k);
          return it == census.by_triple_meet.end() ? 0 : it->second;
        };
        const std::string c = "meet6 " + std::to_string(get(6)) + " meet2 " + std::to_string(get(2)) + " total " +
                              std::to_string(census.total);
        return ClaimResult{c, c == "meet6 1440 meet2 4320 total 5760"};
      });

  add(claim_ids()[9], "unitary group acts by automorphisms, transitively; orders and stabilizers",
      "automorphisms yes orbit 216 linear 25920 full 51840 vertex-stab 240 subquadrangle-stab 1440", [&] {
        const auto r = analyse_group(geo, g, opt.seed);
        const std::string c = std::string("automorphisms ") + (r.all_automorphisms ? "yes" : "no") + " orbit " +
                              std::to_string(r.linear_vertex_orbit) + " linear " + std::to_string(r.linear_order) +
                              " full " + std::to_string(r.full_order) + " vertex-stab " +
                              std::to_string(r.vertex_stabilizer) + " subquadrangle-stab " +
                              std::to_string(r.subquadrangle_stabilizer);
        return ClaimResult{c, c == "automorphisms yes orbit 216 linear 25920 full 51840 vertex-stab 240 "
                                   "subquadrangle-stab 1440" &&
                                  r.subquadrangle_orbit == 36 && r.vertex_orbit == 216};
      });

  add(claim_ids()[10], "an independent rebuild yields byte-identical cache and exports", "identical", [&] {
    const Geometry again = build_geometry(opt.jobs);
    const bool same = export_bundle(again, build_graph(again)) == export_bundle(geo, g);
    return ClaimResult{same ? "identical" : "different", same};
  });

  return rep;
}

}  // namespace hsrg

#endif  // HSRG_REPORT_HPP
