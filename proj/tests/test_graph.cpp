#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hsrg/graph.hpp"
#include "support.hpp"

using namespace hsrg;

namespace {

const Geometry& geo() { return hsrg::test::geometry(); }
const SrgGraph& graph() { return hsrg::test::graph(); }

int common_count(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

// Rank of a square integer matrix over GF(p) by plain Gaussian elimination.
int rank_mod_prime(IntMatrix m, std::int64_t p) {
  const int n = static_cast<int>(m.size());
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  const auto power = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (b %= p; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = power(m[rank][col], p - 2);
    for (int i = rank + 1; i < n; ++i) {
      const std::int64_t f = m[i][col] * inv % p;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Graph, MatchesDirectDefinition) {
  const auto& vs = geo().vertices;
  std::vector<std::vector<int>> ovoid_pts, parent_pts;
  for (const auto& v : vs) {
    ovoid_pts.emplace_back(v.points.begin(), v.points.end());
    parent_pts.push_back(geo().subquadrangles[v.parent].points);
  }
  for (std::size_t u = 0; u < vs.size(); ++u)
    for (std::size_t v = 0; v < vs.size(); ++v) {
      const bool expected =
          u != v && common_count(ovoid_pts[u], ovoid_pts[v]) == 1 && common_count(parent_pts[u], parent_pts[v]) == 6;
      EXPECT_EQ(graph().adjacent(static_cast<int>(u), static_cast<int>(v)), expected) << u << " " << v;
    }
}

TEST(Graph, DegreesAndEdges) {
  EXPECT_EQ(graph().n, 216);
  for (int d : graph().degrees()) EXPECT_EQ(d, 40);
  EXPECT_EQ(graph().edge_count(), 216 * 40 / 2);
  EXPECT_EQ(graph().edges().size(), 4320u);
  for (int u = 0; u < graph().n; ++u) {
    EXPECT_FALSE(graph().adjacent(u, u));
    for (int v = 0; v < graph().n; ++v) {
      EXPECT_EQ(graph().adjacent(u, v), graph().adjacent(v, u));
      if (u != v && geo().vertices[u].parent == geo().vertices[v].parent) {
        EXPECT_FALSE(graph().adjacent(u, v));
      }
    }
  }
  EXPECT_TRUE(is_connected(graph()));
}

TEST(Graph, CertifySrg) {
  const auto p = certify_srg(graph());
  EXPECT_EQ(p, (SrgParams{216, 40, 4, 8}));
  EXPECT_TRUE(p.feasible());
  EXPECT_EQ(certify_srg(graph(), 3), p);
  SrgGraph broken = graph();
  broken.adjacency[0].flip(1);
  broken.adjacency[1].flip(0);
  EXPECT_THROW(certify_srg(broken), CertificationError);
}

TEST(Graph, PairCaseAnalysis) {
  const auto r = pair_case_analysis(graph(), geo());
  EXPECT_EQ(r.pairs.size(), 216u * 215 / 2);
  using Key = std::tuple<int, int, bool, int>;
  const std::map<Key, int> expected{{{3, 0, false, 8}, 6480}, {{3, 1, false, 8}, 3240}, {{6, 0, false, 8}, 6480},
                                    {{6, 1, true, 4}, 4320},  {{6, 2, false, 8}, 2160}, {{15, 1, false, 8}, 540}};
  EXPECT_EQ(r.histogram, expected);
  // Pair counts per subquadrangle meet: 270 * 36, 360 * 36, 36 * 15.
  EXPECT_EQ(6480 + 3240, 270 * 36);
  EXPECT_EQ(6480 + 4320 + 2160, 360 * 36);
  EXPECT_EQ(540, 36 * 15);
}

TEST(Graph, SpectrumMatchesMultiplicityFormula) {
  const SrgParams p{216, 40, 4, 8};
  const auto [r, s] = srg_eigenvalues(p);
  EXPECT_EQ(r, 4);
  EXPECT_EQ(s, -8);
  // f, g = ((v - 1) -+ (2k + (v - 1)(lambda - mu)) / sqrt(delta)) / 2
  const double delta = std::sqrt(double((p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu)));
  const double t = (2.0 * p.k + (p.v - 1) * (p.lambda - p.mu)) / delta;
  const int f = static_cast<int>(std::lround(((p.v - 1) - t) / 2));
  const int g = static_cast<int>(std::lround(((p.v - 1) + t) / 2));
  const auto cert = spectrum_certificate(graph(), p);
  EXPECT_EQ(cert.eigenvalues, (std::array<int, 3>{40, 4, -8}));
  EXPECT_EQ(cert.multiplicities, (std::array<int, 3>{1, f, g}));
  EXPECT_EQ(cert.multiplicities, (std::array<int, 3>{1, 140, 75}));
  EXPECT_EQ(cert.rank_a_minus_r, rank_mod_prime(adjacency_matrix(graph(), -4), 1000003));
  EXPECT_EQ(cert.rank_a_minus_r, 76);
}

TEST(Graph, BareissRankSmall) {
  EXPECT_EQ(bareiss_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(bareiss_rank({{0, 1}, {1, 0}}), 2);
  EXPECT_EQ(bareiss_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2);
  EXPECT_EQ(bareiss_rank({}), 0);
}

TEST(Graph, TrianglesFromTrace) {
  const auto a = adjacency_matrix(graph());
  const auto a2 = multiply(a, a);
  std::int64_t trace = 0;
  for (int i = 0; i < graph().n; ++i)
    for (int j = 0; j < graph().n; ++j) trace += a2[i][j] * a[j][i];
  EXPECT_EQ(trace / 6, 5760);
  EXPECT_EQ(216 * 40 * 4 / 6, 5760);
}

TEST(Graph, DegreeDecomposition) {
  std::string why;
  EXPECT_TRUE(check_degree_decomposition(graph(), geo(), &why)) << why;
}
