#ifndef HSRG_GRAPH_HPP
#define HSRG_GRAPH_HPP

#include <gmpxx.h>

#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/geometry.hpp"
#include "hsrg/parallel.hpp"

namespace hsrg {

using VertexSet = std::bitset<kNumVertices>;

/// Simple graph on the 216 ovoids, adjacency stored as one bitmask per vertex.
struct SrgGraph {
  int n = kNumVertices;
  std::vector<VertexSet> adjacency;

  bool adjacent(int u, int v) const { return adjacency[u].test(v); }
  int degree(int u) const { return static_cast<int>(adjacency[u].count()); }
  int common_neighbours(int u, int v) const { return static_cast<int>((adjacency[u] & adjacency[v]).count()); }

  std::vector<int> degrees() const {
    std::vector<int> d(n);
    for (int u = 0; u < n; ++u) d[u] = degree(u);
    return d;
  }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (int u = 0; u < n; ++u) twice += degree(u);
    return twice / 2;
  }

  /// Sorted (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const SrgGraph&, const SrgGraph&) = default;
};

struct SrgParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Two ovoids are adjacent when they share one point and their subquadrangles share six.
inline SrgGraph build_graph(const Geometry& geo) {
  SrgGraph g;
  g.n = static_cast<int>(geo.vertices.size());
  g.adjacency.assign(g.n, VertexSet{});
  for (int u = 0; u < g.n; ++u) {
    const auto& eu = geo.vertices[u];
    for (int v = u + 1; v < g.n; ++v) {
      const auto& ev = geo.vertices[v];
      if ((eu.mask & ev.mask).count() != 1) continue;
      if (meet_size(geo.subquadrangles[eu.parent], geo.subquadrangles[ev.parent]) != 6) continue;
      g.adjacency[u].set(v);
      g.adjacency[v].set(u);
    }
  }
  return g;
}

inline bool is_connected(const SrgGraph& g) {
  if (g.n == 0) return true;
  VertexSet seen;
  std::queue<int> todo;
  todo.push(0);
  seen.set(0);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int v = 0; v < g.n; ++v)
      if (g.adjacent(u, v) && !seen.test(v)) {
        seen.set(v);
        todo.push(v);
      }
  }
  return static_cast<int>(seen.count()) == g.n;
}

/// Reads (k, lambda, mu) off the graph, then checks
/// A^2 = kI + lambda A + mu (J - I - A) entry by entry over the integers.
inline SrgParams certify_srg(const SrgGraph& g, int jobs = 1) {
  const auto at = [](int u, int v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; };
  for (int u = 0; u < g.n; ++u) {
    if (g.adjacent(u, u)) throw CertificationError("certify_srg: loop at vertex " + std::to_string(u));
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw CertificationError("certify_srg: asymmetric entry " + at(u, v));
  }
  SrgParams p{g.n, g.degree(0), -1, -1};
  for (int u = 0; u < g.n; ++u)
    if (g.degree(u) != p.k)
      throw CertificationError("certify_srg: vertex " + std::to_string(u) + " has degree " +
                               std::to_string(g.degree(u)) + ", vertex 0 has " + std::to_string(p.k));
  for (int v = 1; v < g.n && (p.lambda < 0 || p.mu < 0); ++v) {
    int& slot = g.adjacent(0, v) ? p.lambda : p.mu;
    if (slot < 0) slot = g.common_neighbours(0, v);
  }
  if (p.lambda < 0 || p.mu < 0) throw CertificationError("certify_srg: graph is complete or empty");
  if (!is_connected(g)) throw CertificationError("certify_srg: graph is disconnected");

  std::vector<std::string> failures(static_cast<std::size_t>(g.n));
  parallel_for(jobs, g.n, [&](int lo, int hi) {
    for (int u = lo; u < hi; ++u) {
      for (int v = 0; v < g.n; ++v) {
        const int a = g.adjacent(u, v) ? 1 : 0;
        const int i = u == v ? 1 : 0;
        const int square = g.common_neighbours(u, v);
        const int rhs = p.k * i + p.lambda * a + p.mu * (1 - i - a);
        if (square != rhs) {
          failures[u] = "certify_srg: (A^2)" + at(u, v) + " = " + std::to_string(square) + ", expected " +
                        std::to_string(rhs);
          break;
        }
      }
    }
  });
  for (const auto& f : failures)
    if (!f.empty()) throw CertificationError(f);
  if (!p.feasible()) throw CertificationError("certify_srg: parameters violate k(k-l-1) = (v-k-1)mu");
  return p;
}

/// One unordered pair of vertices, classified by the two intersections.
struct PairRecord {
  int u = 0;
  int v = 0;
  int ovoid_meet = 0;        // |E cap E'|
  int subquadrangle_meet = 0;  // |W cap W'|: 3, 6, or 15 when W = W'
  bool adjacent = false;
  int common = 0;
};

struct PairReport {
  std::vector<PairRecord> pairs;
  /// (|W cap W'|, |E cap E'|, adjacent, common neighbours) -> number of pairs
  std::map<std::tuple<int, int, bool, int>, int> histogram;
};

/// Walks every unordered pair and checks that only the allowed
/// (subquadrangle meet, ovoid meet, adjacency) combinations occur.
inline PairReport pair_case_analysis(const SrgGraph& g, const Geometry& geo) {
  PairReport r;
  r.pairs.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      const auto& eu = geo.vertices[u];
      const auto& ev = geo.vertices[v];
      PairRecord rec{u, v, static_cast<int>((eu.mask & ev.mask).count()),
                     meet_size(geo.subquadrangles[eu.parent], geo.subquadrangles[ev.parent]), g.adjacent(u, v),
                     g.common_neighbours(u, v)};
      bool ok = false;
      switch (rec.subquadrangle_meet) {
        case 6:
          ok = rec.adjacent ? rec.ovoid_meet == 1 : (rec.ovoid_meet == 0 || rec.ovoid_meet == 2);
          break;
        case 3:
          ok = !rec.adjacent && (rec.ovoid_meet == 0 || rec.ovoid_meet == 1);
          break;
        case 15:
          ok = !rec.adjacent && rec.ovoid_meet == 1;
          break;
        default:
          break;
      }
      if (!ok)
        throw StructureError("pair_case_analysis: pair (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has |W^W'| = " + std::to_string(rec.subquadrangle_meet) + ", |E^E'| = " +
                             std::to_string(rec.ovoid_meet) + (rec.adjacent ? ", adjacent" : ", not adjacent"));
      ++r.histogram[{rec.subquadrangle_meet, rec.ovoid_meet, rec.adjacent, rec.common}];
      r.pairs.push_back(rec);
    }
  }
  return r;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix adjacency_matrix(const SrgGraph& g, std::int64_t diagonal_shift = 0) {
  IntMatrix a(g.n, std::vector<std::int64_t>(g.n, 0));
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
    a[u][u] += diagonal_shift;
  }
  return a;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination with row pivoting.
inline int bareiss_rank(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);

  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

struct SpectrumCertificate {
  std::array<int, 3> eigenvalues{};     // k, r, s
  std::array<int, 3> multiplicities{};  // 1, n - rank(A - rI), rank(A - rI) - 1
  int rank_a_minus_r = 0;
};

/// Restricted eigenvalues r > s of an SRG: roots of x^2 + (mu - lambda)x + (mu - k).
inline std::pair<int, int> srg_eigenvalues(const SrgParams& p) {
  const int d = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
  int root = 0;
  while (root * root < d) ++root;
  if (root * root != d) throw CertificationError("srg_eigenvalues: discriminant is not a square");
  return {(p.lambda - p.mu + root) / 2, (p.lambda - p.mu - root) / 2};
}

/// Checks (A - rI)(A - sI) = mu J by exact matrix multiplication, then reads
/// the multiplicities off rank(A - rI) and checks the trace.
inline SpectrumCertificate spectrum_certificate(const SrgGraph& g, const SrgParams& p) {
  const auto [r, s] = srg_eigenvalues(p);
  const IntMatrix a_r = adjacency_matrix(g, -r);
  const IntMatrix prod = multiply(a_r, adjacency_matrix(g, -s));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (prod[u][v] != p.mu)
        throw CertificationError("spectrum_certificate: ((A - rI)(A - sI))(" + std::to_string(u) + ", " +
                                 std::to_string(v) + ") = " + std::to_string(prod[u][v]));
  SpectrumCertificate c;
  c.rank_a_minus_r = bareiss_rank(a_r);
  c.eigenvalues = {p.k, r, s};
  c.multiplicities = {1, g.n - c.rank_a_minus_r, c.rank_a_minus_r - 1};
  const std::int64_t trace = p.k + std::int64_t{r} * c.multiplicities[1] + std::int64_t{s} * c.multiplicities[2];
  if (trace != 0) throw CertificationError("spectrum_certificate: trace identity fails, sum = " + std::to_string(trace));
  return c;
}

/// For each vertex E, its neighbours split into groups of 4, one per line
/// joining two points of E: each group lies in the two other subquadrangles
/// through the six surface points of that line and its polar.
inline bool check_degree_decomposition(const SrgGraph& g, const Geometry& geo, std::string* failure = nullptr) {
  const auto& space = ProjectiveSpace::instance();
  const auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  for (const auto& e : geo.vertices) {
    const auto& w = geo.parent(e);
    VertexSet covered;
    int groups = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const int line = space.line_index(e.points[i], e.points[j]);
        const PointSet in_sigma = space.lines()[line].mask & w.mask;
        if (in_sigma.count() != 3 || !geo.surface.is_secant(line))
          return fail("vertex " + std::to_string(e.id) + ": joining line is not a secant with 3 Baer points");
        const auto triple = triple_through_secant(geo.surface, geo.subquadrangles, line);
        VertexSet group;
        for (int sq : triple) {
          if (sq == w.id) continue;
          for (int k = 0; k < kOvoidsPerSubquadrangle; ++k) {
            const int v = sq * kOvoidsPerSubquadrangle + k;
            if (g.adjacent(e.id, v)) group.set(v);
          }
        }
        if (group.count() != 4)
          return fail("vertex " + std::to_string(e.id) + ": group of size " + std::to_string(group.count()));
        if ((group & covered).any()) return fail("vertex " + std::to_string(e.id) + ": groups overlap");
        // Each member of the group contains the third Baer point of the line and one of the two ovoid points.
        const PointSet third = in_sigma & ~e.mask;
        for (int v = 0; v < g.n; ++v) {
          if (!group.test(v)) continue;
          const PointSet m = geo.vertices[v].mask & in_sigma;
          if (m.count() != 2 || (m & third).none())
            return fail("vertex " + std::to_string(e.id) + ": neighbour " + std::to_string(v) + " misses the line");
        }
        covered |= group;
        ++groups;
      }
    }
    if (groups != 10 || covered != g.adjacency[e.id])
      return fail("vertex " + std::to_string(e.id) + ": groups do not cover the neighbourhood");
  }
  return true;
}

}  // namespace hsrg

#endif  // HSRG_GRAPH_HPP
