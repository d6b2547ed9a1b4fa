#ifndef HSRG_CLIQUES_HPP
#define HSRG_CLIQUES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/graph.hpp"

namespace hsrg {

struct CliqueRecord {
  std::array<int, 3> vertices{};  // sorted
  int triple_meet = 0;             // |W cap W' cap W''|, filled by classify_cliques

  friend bool operator==(const CliqueRecord&, const CliqueRecord&) = default;
};

struct CliqueCensus {
  std::map<int, int> by_triple_meet;  // triple-meet size -> number of cliques
  int total = 0;
};

/// Every triangle u < v < w, in lexicographic order. Fails if a triangle
/// extends to a 4-clique or if some edge lies in no triangle, so the result
/// is exactly the set of maximal cliques.
inline std::vector<CliqueRecord> enumerate_maximal_cliques(const SrgGraph& g) {
  std::vector<CliqueRecord> out;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.adjacent(u, v)) continue;
      const VertexSet common = g.adjacency[u] & g.adjacency[v];
      if (common.none())
        throw StructureError("enumerate_maximal_cliques: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") lies in no triangle");
      for (int w = v + 1; w < g.n; ++w) {
        if (!common.test(w)) continue;
        if ((common & g.adjacency[w]).any())
          throw StructureError("enumerate_maximal_cliques: triangle (" + std::to_string(u) + ", " +
                               std::to_string(v) + ", " + std::to_string(w) + ") extends to a 4-clique");
        out.push_back({{u, v, w}, 0});
      }
    }
  }
  return out;
}

/// Fills triple_meet on each record and counts cliques per value.
inline CliqueCensus classify_cliques(std::vector<CliqueRecord>& records, const Geometry& geo) {
  CliqueCensus c;
  for (auto& r : records) {
    PointSet meet;
    meet.set();
    for (int v : r.vertices) meet &= geo.parent(geo.vertices[v]).mask;
    r.triple_meet = static_cast<int>(meet.count());
    if (r.triple_meet != 6 && r.triple_meet != 2)
      throw StructureError("classify_cliques: clique (" + std::to_string(r.vertices[0]) + ", " +
                           std::to_string(r.vertices[1]) + ", " + std::to_string(r.vertices[2]) +
                           ") has triple meet " + std::to_string(r.triple_meet));
    ++c.by_triple_meet[r.triple_meet];
    ++c.total;
  }
  return c;
}

}  // namespace hsrg

#endif  // HSRG_CLIQUES_HPP
