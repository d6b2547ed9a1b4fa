#ifndef HSRG_GEOMETRY_HPP
#define HSRG_GEOMETRY_HPP

#include <array>
#include <map>
#include <vector>

#include "hsrg/hermitian.hpp"
#include "hsrg/ovoids.hpp"
#include "hsrg/projective.hpp"
#include "hsrg/subquadrangles.hpp"

namespace hsrg {

/// Everything the graph is built from: surface, subquadrangles and ovoids.
struct Geometry {
  HermitianSurface surface;
  std::vector<Subquadrangle> subquadrangles;
  std::vector<OvoidVertex> vertices;
  std::map<std::array<int, 5>, int> vertex_of;  // sorted 5-set -> vertex id

  const Subquadrangle& parent(const OvoidVertex& v) const { return subquadrangles[v.parent]; }

  /// Vertex with the given sorted point set, or -1.
  int find_vertex(const std::array<int, 5>& sorted_points) const {
    auto it = vertex_of.find(sorted_points);
    return it == vertex_of.end() ? -1 : it->second;
  }

  void index_vertices() {
    vertex_of.clear();
    for (const auto& v : vertices) vertex_of.emplace(v.points, v.id);
  }
};

inline Geometry build_geometry(int jobs = 1) {
  Geometry g;
  g.surface = build_surface();
  g.subquadrangles = enumerate_subquadrangles(g.surface, jobs);
  for (const auto& w : g.subquadrangles) {
    auto ovs = enumerate_ovoids(w);
    g.vertices.insert(g.vertices.end(), ovs.begin(), ovs.end());
  }
  g.index_vertices();
  return g;
}

}  // namespace hsrg

#endif  // HSRG_GEOMETRY_HPP
