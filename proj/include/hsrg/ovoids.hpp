#ifndef HSRG_OVOIDS_HPP
#define HSRG_OVOIDS_HPP

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/subquadrangles.hpp"

namespace hsrg {

inline constexpr int kOvoidsPerSubquadrangle = 6;
inline constexpr int kNumVertices = kNumSubquadrangles * kOvoidsPerSubquadrangle;

/// An elliptic ovoid of a subquadrangle; the vertex type of the graph.
struct OvoidVertex {
  int id = 0;
  std::array<int, 5> points{};  // sorted
  PointSet mask;
  int parent = 0;
};

/// True if `set` meets every generator of w in exactly one point.
inline bool is_ovoid_of(const Subquadrangle& w, const PointSet& set) {
  if ((set & ~w.mask).any()) return false;
  return std::all_of(w.generators.begin(), w.generators.end(), [&](const SubGenerator& g) {
    int hits = 0;
    for (int p : g.points) hits += set.test(p) ? 1 : 0;
    return hits == 1;
  });
}

namespace detail {

inline void extend_ovoid(const Subquadrangle& w, const std::vector<std::vector<int>>& gens_of_point, int next,
                         std::vector<int>& chosen, std::vector<int>& hits, std::vector<std::array<int, 5>>& out) {
  if (chosen.size() == 5) {
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }))
      out.push_back({chosen[0], chosen[1], chosen[2], chosen[3], chosen[4]});
    return;
  }
  for (int i = next; i < static_cast<int>(w.points.size()); ++i) {
    const auto& gens = gens_of_point[i];
    if (std::any_of(gens.begin(), gens.end(), [&](int g) { return hits[g] > 0; })) continue;
    for (int g : gens) ++hits[g];
    chosen.push_back(w.points[i]);
    extend_ovoid(w, gens_of_point, i + 1, chosen, hits, out);
    chosen.pop_back();
    for (int g : gens) --hits[g];
  }
}

}  // namespace detail

/// The six ovoids of w in canonical order; ids are 6 * w.id + position.
inline std::vector<OvoidVertex> enumerate_ovoids(const Subquadrangle& w) {
  std::vector<std::vector<int>> gens_of_point(w.points.size());
  for (std::size_t i = 0; i < w.points.size(); ++i)
    for (std::size_t g = 0; g < w.generators.size(); ++g) {
      const auto& gp = w.generators[g].points;
      if (std::find(gp.begin(), gp.end(), w.points[i]) != gp.end()) gens_of_point[i].push_back(static_cast<int>(g));
    }
  std::vector<int> chosen;
  std::vector<int> hits(w.generators.size(), 0);
  std::vector<std::array<int, 5>> sets;
  detail::extend_ovoid(w, gens_of_point, 0, chosen, hits, sets);
  if (sets.size() != kOvoidsPerSubquadrangle)
    throw CountMismatchError("enumerate_ovoids(" + std::to_string(w.id) + "): found " + std::to_string(sets.size()));
  std::sort(sets.begin(), sets.end());
  std::vector<OvoidVertex> out;
  for (const auto& s : sets) {
    OvoidVertex v{w.id * kOvoidsPerSubquadrangle + static_cast<int>(out.size()), s, to_mask(s), w.id};
    out.push_back(v);
  }
  return out;
}

inline bool joined_by_generator(const Subquadrangle& w, int p, int q) {
  return std::any_of(w.generators.begin(), w.generators.end(), [&](const SubGenerator& g) {
    return std::find(g.points.begin(), g.points.end(), p) != g.points.end() &&
           std::find(g.points.begin(), g.points.end(), q) != g.points.end();
  });
}

/// The unique ovoid of w (among `ovoids`, the ovoids of w) through p and q.
inline const OvoidVertex& ovoid_through_pair(const Subquadrangle& w, std::span<const OvoidVertex> ovoids, int p,
                                             int q) {
  if (p == q || !w.mask.test(p) || !w.mask.test(q))
    throw std::invalid_argument("ovoid_through_pair: need two distinct points of the subquadrangle");
  if (joined_by_generator(w, p, q))
    throw StructureError("ovoid_through_pair: points are joined by a generator");
  const OvoidVertex* hit = nullptr;
  for (const auto& o : ovoids) {
    if (o.parent != w.id || !o.mask.test(p) || !o.mask.test(q)) continue;
    if (hit) throw StructureError("ovoid_through_pair: more than one ovoid through the pair");
    hit = &o;
  }
  if (!hit) throw StructureError("ovoid_through_pair: no ovoid through the pair");
  return *hit;
}

/// The subquadrangle containing the 5-set as an ovoid; must be unique.
inline int parent_of(const std::vector<Subquadrangle>& subs, std::span<const int> points) {
  if (points.size() != 5) throw LookupError("parent_of: expected 5 points");
  const PointSet set = to_mask(points);
  int parent = -1;
  for (const auto& w : subs) {
    if (!is_ovoid_of(w, set)) continue;
    if (parent >= 0) throw StructureError("parent_of: 5-set is an ovoid of two subquadrangles");
    parent = w.id;
  }
  if (parent < 0) throw LookupError("parent_of: 5-set is not an ovoid of any subquadrangle");
  return parent;
}

}  // namespace hsrg

#endif  // HSRG_OVOIDS_HPP
