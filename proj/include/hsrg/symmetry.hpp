#ifndef HSRG_SYMMETRY_HPP
#define HSRG_SYMMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/geometry.hpp"
#include "hsrg/graph.hpp"
#include "hsrg/hermitian.hpp"

namespace hsrg {

/// x -> M x on column vectors, optionally followed by entrywise conjugation.
struct UnitaryCollineation {
  Mat4 matrix = identity_matrix();
  bool semilinear = false;

  friend bool operator==(const UnitaryCollineation&, const UnitaryCollineation&) = default;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// M preserves h(x, y) = x^T G conj(y) under x -> M x iff M^T G conj(M) = G.
/// For G = I this is the same condition as conj(M)^T M = I.
inline bool is_unitary(const Mat4& m, const UnitaryPolarity& pol = UnitaryPolarity{}) {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
  Mat4 cm{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) cm[i][j] = conj(m[i][j]);
  return multiply(multiply(t, pol.gram()), cm) == pol.gram();
}

inline Vec4 act(const UnitaryCollineation& g, const Vec4& x) {
  Vec4 y = matvec(g.matrix, x);
  return g.semilinear ? conj(y) : y;
}

/// Image of every point of PG(3,4).
inline std::vector<int> point_map(const UnitaryCollineation& g) {
  const auto& space = ProjectiveSpace::instance();
  std::vector<int> out(kNumPoints);
  for (const auto& p : space.points()) out[p.index] = space.point_index(act(g, p.coords));
  return out;
}

/// Coordinate cycle, coordinate swap, a diagonal scaling and I + J. I + J is
/// the transvection x -> x + h(x, u) u with u = (1, 1, 1, 1) isotropic.
inline std::vector<UnitaryCollineation> fallback_generators() {
  std::vector<UnitaryCollineation> out;
  Mat4 cycle{};
  for (int i = 0; i < 4; ++i) cycle[(i + 1) % 4][i] = Gf4::one();
  Mat4 swap = identity_matrix();
  swap[0][0] = swap[1][1] = Gf4::zero();
  swap[0][1] = swap[1][0] = Gf4::one();
  Mat4 diag = identity_matrix();
  diag[0][0] = Gf4::w();
  Mat4 transvection{};
  for (auto& row : transvection) row.fill(Gf4::one());
  for (int i = 0; i < 4; ++i) transvection[i][i] = Gf4::zero();
  for (const auto& m : {cycle, swap, diag, transvection}) out.push_back({m, false});
  return out;
}

struct GeneratorSearch {
  std::vector<UnitaryCollineation> linear;
  UnitaryCollineation frobenius{identity_matrix(), true};
  std::uint64_t trials = 0;
  bool used_fallback = false;
};

/// Uniformly random 4x4 matrices from a seeded stream, kept when unitary.
class UnitarySampler {
 public:
  explicit UnitarySampler(std::uint64_t seed) : rng_(seed) {}

  /// Next unitary matrix, or throws TimeoutError after `budget` trials.
  Mat4 next(std::uint64_t budget, std::uint64_t* trials = nullptr) {
    std::uniform_int_distribution<int> digit(0, 3);
    for (std::uint64_t t = 1; t <= budget; ++t) {
      Mat4 m;
      for (auto& row : m)
        for (auto& x : row) x = Gf4(static_cast<std::uint8_t>(digit(rng_)));
      if (is_unitary(m)) {
        if (trials) *trials += t;
        return m;
      }
    }
    if (trials) *trials += budget;
    throw TimeoutError("UnitarySampler: no unitary matrix within " + std::to_string(budget) + " trials");
  }

 private:
  std::mt19937_64 rng_;
};

/// `count` random linear unitary collineations plus the Frobenius map.
/// With allow_fallback, an exhausted budget yields fallback_generators()
/// instead of a TimeoutError.
inline GeneratorSearch find_unitary_generators(std::uint64_t seed, int count, std::uint64_t budget = 50'000'000,
                                               bool allow_fallback = true) {
  if (count < 2) throw std::invalid_argument("find_unitary_generators: count must be at least 2");
  GeneratorSearch out;
  UnitarySampler sampler(seed);
  try {
    std::uint64_t left = budget;
    for (int i = 0; i < count; ++i) {
      std::uint64_t before = out.trials;
      out.linear.push_back({sampler.next(left, &out.trials), false});
      left -= out.trials - before;
    }
  } catch (const TimeoutError&) {
    if (!allow_fallback) throw;
    out.linear = fallback_generators();
    out.used_fallback = true;
  }
  return out;
}

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

/// Apply a, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Permutation inverse(const Permutation& a) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

/// Action of a collineation on the 216 vertices.
inline Permutation induce_vertex_permutation(const UnitaryCollineation& g, const Geometry& geo) {
  const auto pm = point_map(g);
  Permutation out(geo.vertices.size(), -1);
  std::vector<bool> hit(geo.vertices.size(), false);
  for (const auto& v : geo.vertices) {
    std::array<int, 5> image{};
    for (int i = 0; i < 5; ++i) image[i] = pm[v.points[i]];
    std::sort(image.begin(), image.end());
    const int w = geo.find_vertex(image);
    if (w < 0 || hit[w])
      throw StructureError("induce_vertex_permutation: image of vertex " + std::to_string(v.id) +
                           " is not a distinct ovoid");
    hit[w] = true;
    out[v.id] = w;
  }
  return out;
}

/// Action on the 36 subquadrangles.
inline Permutation induce_subquadrangle_permutation(const UnitaryCollineation& g, const Geometry& geo) {
  const auto pm = point_map(g);
  Permutation out(geo.subquadrangles.size(), -1);
  for (const auto& w : geo.subquadrangles) {
    PointSet image;
    for (int p : w.points) image.set(pm[p]);
    auto it = std::find_if(geo.subquadrangles.begin(), geo.subquadrangles.end(),
                           [&](const Subquadrangle& x) { return x.mask == image; });
    if (it == geo.subquadrangles.end())
      throw StructureError("induce_subquadrangle_permutation: image of " + std::to_string(w.id) +
                           " is not a subquadrangle");
    out[w.id] = it->id;
  }
  return out;
}

/// Vertices 0..215 followed by subquadrangles 216..251, so one stabilizer
/// chain answers both vertex and subquadrangle stabilizer questions.
inline Permutation induce_combined_permutation(const UnitaryCollineation& g, const Geometry& geo) {
  Permutation out = induce_vertex_permutation(g, geo);
  const int offset = static_cast<int>(out.size());
  for (int x : induce_subquadrangle_permutation(g, geo)) out.push_back(x + offset);
  return out;
}

inline bool is_automorphism(const Permutation& p, const SrgGraph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
  return true;
}

/// Orbit of `start` under the group generated by `gens`.
inline std::vector<int> orbit(std::span<const Permutation> gens, int start) {
  std::vector<int> out{start};
  if (gens.empty()) return out;
  std::vector<bool> seen(gens.front().size(), false);
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      const int y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

inline int verify_transitivity(std::span<const Permutation> gens, int start = 0) {
  return static_cast<int>(orbit(gens, start).size());
}

/// Deterministic Schreier-Sims: base, strong generating set, and one
/// transversal per level. Order is the product of the basic orbit lengths.
class StabilizerChain {
 public:
  /// `base_prefix` fixes the first base points, so that level i's group is
  /// the pointwise stabilizer of base_prefix[0..i-1].
  StabilizerChain(int degree, std::span<const Permutation> gens, std::vector<int> base_prefix = {})
      : degree_(degree), base_(std::move(base_prefix)) {
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != degree_) throw std::invalid_argument("StabilizerChain: degree mismatch");
      if (!is_identity(g)) add_strong_generator(g);
    }
    complete();
  }

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  std::size_t strong_generator_count() const { return strong_.size(); }

  std::vector<int> basic_orbit_lengths() const {
    std::vector<int> out;
    for (const auto& l : levels_) out.push_back(static_cast<int>(l.orbit.size()));
    return out;
  }

  /// |G^(level)|, the order of the stabilizer of base[0..level-1].
  std::uint64_t order(std::size_t level = 0) const {
    std::uint64_t n = 1;
    for (std::size_t i = level; i < levels_.size(); ++i) n *= levels_[i].orbit.size();
    return n;
  }

  bool contains(const Permutation& g) const {
    auto [h, level] = sift(g, 0);
    return level == levels_.size() && is_identity(h);
  }

 private:
  struct Level {
    std::vector<int> orbit;
    std::vector<int> slot;                  // point -> index in orbit, or -1
    std::vector<Permutation> transversal;  // transversal[i] maps base point to orbit[i]
  };

  void add_strong_generator(const Permutation& g) {
    strong_.push_back(g);
    const bool moves_base = std::any_of(base_.begin(), base_.end(), [&](int b) { return g[b] != b; });
    if (!moves_base) {
      for (int x = 0; x < degree_; ++x)
        if (g[x] != x) {
          base_.push_back(x);
          break;
        }
    }
  }

  std::vector<Permutation> level_generators(std::size_t level) const {
    std::vector<Permutation> out;
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t i = 0; i < level && fixes; ++i) fixes = s[base_[i]] == base_[i];
      if (fixes) out.push_back(s);
    }
    return out;
  }

  void rebuild_levels() {
    levels_.assign(base_.size(), Level{});
    for (std::size_t i = 0; i < base_.size(); ++i) {
      auto& l = levels_[i];
      l.slot.assign(degree_, -1);
      l.orbit.push_back(base_[i]);
      l.slot[base_[i]] = 0;
      l.transversal.push_back(identity_permutation(degree_));
      const auto gens = level_generators(i);
      for (std::size_t k = 0; k < l.orbit.size(); ++k)
        for (const auto& g : gens) {
          const int y = g[l.orbit[k]];
          if (l.slot[y] >= 0) continue;
          l.slot[y] = static_cast<int>(l.orbit.size());
          l.orbit.push_back(y);
          l.transversal.push_back(compose(l.transversal[k], g));
        }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const int slot = levels_[i].slot[g[base_[i]]];
      if (slot < 0) return {g, i};
      g = compose(g, inverse(levels_[i].transversal[slot]));
    }
    return {g, levels_.size()};
  }

  /// Adds sifted Schreier generators until every one sifts to the identity.
  void complete() {
    for (;;) {
      rebuild_levels();
      bool grew = false;
      for (std::size_t i = levels_.size(); i-- > 0 && !grew;) {
        const auto gens = level_generators(i);
        const auto& l = levels_[i];
        for (std::size_t k = 0; k < l.orbit.size() && !grew; ++k)
          for (const auto& s : gens) {
            const Permutation ug = compose(l.transversal[k], s);
            const Permutation schreier = compose(ug, inverse(l.transversal[l.slot[ug[base_[i]]]]));
            if (is_identity(schreier)) continue;
            auto [h, level] = sift(schreier, i + 1);
            if (is_identity(h)) continue;
            add_strong_generator(h);
            grew = true;
            break;
          }
      }
      if (!grew) return;
    }
  }

  int degree_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

inline std::uint64_t group_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  return StabilizerChain(static_cast<int>(gens.front().size()), gens).order();
}

/// Orders and orbit data for the unitary action on the graph.
struct GroupReport {
  std::uint64_t seed = 0;
  GeneratorSearch search;
  std::vector<UnitaryCollineation> extra_linear;  // added while waiting for the order to settle
  std::uint64_t linear_order = 0;
  std::uint64_t full_order = 0;
  int linear_vertex_orbit = 0;
  int vertex_orbit = 0;
  int subquadrangle_orbit = 0;
  std::uint64_t vertex_stabilizer = 0;
  std::uint64_t subquadrangle_stabilizer = 0;
  bool all_automorphisms = false;
};

/// Samples `count` linear generators, then keeps adding random unitary
/// elements until `stable_rounds` consecutive additions leave the order
/// unchanged. Stabilizer orders come from chains whose base starts at
/// vertex 0 and at subquadrangle 0.
inline GroupReport analyse_group(const Geometry& geo, const SrgGraph& g, std::uint64_t seed, int count = 2,
                                 int stable_rounds = 4) {
  GroupReport r;
  r.seed = seed;
  r.search = find_unitary_generators(seed, count);
  const int degree = kNumVertices + kNumSubquadrangles;

  std::vector<Permutation> linear;
  for (const auto& c : r.search.linear) linear.push_back(induce_combined_permutation(c, geo));
  r.linear_order = StabilizerChain(degree, linear).order();
  UnitarySampler extra(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int stable = 0; stable < stable_rounds;) {
    UnitaryCollineation c{extra.next(50'000'000), false};
    linear.push_back(induce_combined_permutation(c, geo));
    const auto n = StabilizerChain(degree, linear).order();
    if (n == r.linear_order) {
      ++stable;
      linear.pop_back();
    } else {
      r.extra_linear.push_back(c);
      r.linear_order = n;
      stable = 0;
    }
  }

  r.linear_vertex_orbit = verify_transitivity(linear, 0);

  std::vector<Permutation> full = linear;
  full.push_back(induce_combined_permutation(r.search.frobenius, geo));
  const StabilizerChain at_vertex(degree, full, {0});
  const StabilizerChain at_subquadrangle(degree, full, {kNumVertices});
  r.full_order = at_vertex.order();
  r.vertex_stabilizer = at_vertex.order(1);
  r.subquadrangle_stabilizer = at_subquadrangle.order(1);
  r.vertex_orbit = static_cast<int>(at_vertex.basic_orbit_lengths().front());
  r.subquadrangle_orbit = static_cast<int>(at_subquadrangle.basic_orbit_lengths().front());

  r.all_automorphisms = std::all_of(full.begin(), full.end(), [&](const Permutation& p) {
    return is_automorphism(Permutation(p.begin(), p.begin() + kNumVertices), g);
  });
  return r;
}

}  // namespace hsrg

#endif  // HSRG_SYMMETRY_HPP
