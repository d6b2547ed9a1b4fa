#ifndef HSRG_SUBQUADRANGLES_HPP
#define HSRG_SUBQUADRANGLES_HPP

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/hermitian.hpp"
#include "hsrg/parallel.hpp"
#include "hsrg/projective.hpp"

namespace hsrg {

inline constexpr int kNumSubquadrangles = 36;

/// A generator of H(3,4) restricted to a subquadrangle.
struct SubGenerator {
  int line = 0;
  std::array<int, 3> points{};

  friend bool operator==(const SubGenerator&, const SubGenerator&) = default;
};

/// Symplectic subquadrangle W(3,2): a Baer subgeometry whose 15 points all lie
/// on the surface, with the 15 surface generators meeting it in 3 points.
struct Subquadrangle {
  int id = 0;
  std::vector<int> points;  // sorted, 15 entries
  PointSet mask;
  std::vector<SubGenerator> generators;  // sorted by line index

  std::vector<PointSet> generator_masks() const {
    std::vector<PointSet> out;
    for (const auto& g : generators) out.push_back(to_mask(g.points));
    return out;
  }
};

enum class PairKind { ThreeOnGenerator, SixOnSecantPair };

struct PairClass {
  int first = 0;
  int second = 0;
  std::vector<int> meet;
  PairKind kind = PairKind::ThreeOnGenerator;
  int generator = -1;                 // ThreeOnGenerator: the generator carrying the meet
  std::array<int, 2> secants{-1, -1};  // SixOnSecantPair: s < s^perp by line index
};

/// Attaches the generator structure to a candidate point set and checks that
/// every surface generator meets it in 0 or 3 points, 15 of them in 3.
inline Subquadrangle make_subquadrangle(const HermitianSurface& surface, int id, const PointSet& mask) {
  const auto& space = ProjectiveSpace::instance();
  Subquadrangle w{id, to_indices(mask), mask, {}};
  for (int l : surface.generators) {
    PointSet meet = space.lines()[l].mask & mask;
    auto n = meet.count();
    if (n == 3) {
      auto pts = to_indices(meet);
      w.generators.push_back({l, {pts[0], pts[1], pts[2]}});
    } else if (n != 0) {
      throw StructureError("subquadrangle " + std::to_string(id) + ": generator " + std::to_string(l) + " meets it in " +
                           std::to_string(n) + " points");
    }
  }
  if (w.points.size() != 15 || w.generators.size() != 15)
    throw StructureError("subquadrangle " + std::to_string(id) + ": expected 15 points and 15 generators");
  return w;
}

/// All Baer subgeometries contained in the surface, found by closing every
/// independent 4-subset of surface points under each of its 27 projective
/// scalings. `reverse_order` walks the 4-subsets from the other end; the
/// result is the same canonical list either way.
inline std::vector<Subquadrangle> enumerate_subquadrangles(const HermitianSurface& surface, int jobs = 1,
                                                           bool reverse_order = false) {
  const auto& space = ProjectiveSpace::instance();
  std::vector<int> pts = surface.points;
  if (reverse_order) std::reverse(pts.begin(), pts.end());
  const int n = static_cast<int>(pts.size());

  std::set<std::vector<int>> found;
  std::mutex found_mutex;

  parallel_for(jobs, n, [&](int lo, int hi) {
    std::set<std::vector<int>> local;
    for (int a = lo; a < hi; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          for (int d = c + 1; d < n; ++d) {
            const std::array<int, 4> quad{pts[a], pts[b], pts[c], pts[d]};
            if (space.span_rank(quad) != 4) continue;
            for (Gf4 s2 : kGf4Units) {
              for (Gf4 s3 : kGf4Units) {
                for (Gf4 s4 : kGf4Units) {
                  const std::array<Vec4, 4> basis{space.coords(quad[0]), scale(s2, space.coords(quad[1])),
                                                  scale(s3, space.coords(quad[2])), scale(s4, space.coords(quad[3]))};
                  bool inside = true;
                  PointSet closure;
                  for (unsigned m = 3; m < 16 && inside; ++m) {
                    if ((m & (m - 1)) == 0) continue;  // single basis vectors are surface points already
                    Vec4 v{};
                    for (int i = 0; i < 4; ++i)
                      if (m & (1u << i)) v = v + basis[i];
                    int p = space.point_index(v);
                    inside = surface.contains(p);
                    closure.set(p);
                  }
                  if (!inside) continue;
                  for (int q : quad) closure.set(q);
                  local.insert(to_indices(closure));
                }
              }
            }
          }
        }
      }
    }
    std::lock_guard lock(found_mutex);
    found.insert(local.begin(), local.end());
  });

  if (found.size() != kNumSubquadrangles)
    throw CountMismatchError("enumerate_subquadrangles: found " + std::to_string(found.size()) +
                             " subquadrangles, expected 36");
  std::vector<Subquadrangle> out;
  for (const auto& pset : found)
    out.push_back(make_subquadrangle(surface, static_cast<int>(out.size()), to_mask(pset)));
  return out;
}

inline PairClass classify_pair(const HermitianSurface& surface, const Subquadrangle& w1, const Subquadrangle& w2) {
  if (w1.id == w2.id) throw std::invalid_argument("classify_pair: identical subquadrangles");
  const auto& space = ProjectiveSpace::instance();
  PairClass pc;
  pc.first = w1.id;
  pc.second = w2.id;
  const PointSet meet = w1.mask & w2.mask;
  pc.meet = to_indices(meet);
  const auto where = "classify_pair(" + std::to_string(w1.id) + ", " + std::to_string(w2.id) + "): ";

  if (pc.meet.size() == 3) {
    pc.kind = PairKind::ThreeOnGenerator;
    int l = space.line_index(pc.meet[0], pc.meet[1]);
    if (!surface.is_generator(l) || !space.lines()[l].mask.test(pc.meet[2]))
      throw StructureError(where + "three common points not on a generator");
    pc.generator = l;
    return pc;
  }
  if (pc.meet.size() != 6) throw StructureError(where + "meet of size " + std::to_string(pc.meet.size()));

  pc.kind = PairKind::SixOnSecantPair;
  std::set<int> rich;
  for (std::size_t i = 0; i < pc.meet.size(); ++i)
    for (std::size_t j = i + 1; j < pc.meet.size(); ++j) {
      int l = space.line_index(pc.meet[i], pc.meet[j]);
      if ((space.lines()[l].mask & meet).count() == 3) rich.insert(l);
    }
  if (rich.size() != 2) throw StructureError(where + "six common points are not on two lines");
  const int s = *rich.begin();
  const int t = *rich.rbegin();
  if (!surface.is_secant(s) || surface.polar_line(s) != t)
    throw StructureError(where + "the two lines are not a secant and its polar");
  if (((space.lines()[s].mask | space.lines()[t].mask) & surface.mask) != meet)
    throw StructureError(where + "meet differs from (s u s^perp) cap H");
  pc.secants = {s, t};
  return pc;
}

/// Surface points of s and s^perp.
inline PointSet secant_pair_points(const HermitianSurface& surface, int secant) {
  const auto& space = ProjectiveSpace::instance();
  return (space.lines()[secant].mask | space.lines()[surface.polar_line(secant)].mask) & surface.mask;
}

/// The three subquadrangles through the six surface points of s and s^perp.
inline std::array<int, 3> triple_through_secant(const HermitianSurface& surface,
                                                const std::vector<Subquadrangle>& subs, int secant) {
  if (!surface.is_secant(secant)) throw std::invalid_argument("triple_through_secant: line is not secant");
  const PointSet six = secant_pair_points(surface, secant);
  std::vector<int> ids;
  for (const auto& w : subs)
    if ((w.mask & six) == six) ids.push_back(w.id);
  if (ids.size() != 3)
    throw CountMismatchError("triple_through_secant(" + std::to_string(secant) + "): " + std::to_string(ids.size()) +
                             " subquadrangles");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if ((subs[ids[i]].mask & subs[ids[j]].mask) != six)
        throw StructureError("triple_through_secant(" + std::to_string(secant) + "): members meet outside the six points");
  return {ids[0], ids[1], ids[2]};
}

inline int meet_size(const Subquadrangle& a, const Subquadrangle& b) {
  return static_cast<int>((a.mask & b.mask).count());
}

/// Number of further subquadrangles meeting both a and b in six points.
inline int common_six_meet_count(const std::vector<Subquadrangle>& subs, int a, int b) {
  int n = 0;
  for (const auto& w : subs) {
    if (w.id == a || w.id == b) continue;
    if (meet_size(w, subs[a]) == 6 && meet_size(w, subs[b]) == 6) ++n;
  }
  return n;
}

}  // namespace hsrg

#endif  // HSRG_SUBQUADRANGLES_HPP
