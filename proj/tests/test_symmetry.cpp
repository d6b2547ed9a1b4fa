#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "hsrg/symmetry.hpp"
#include "support.hpp"

using namespace hsrg;

namespace {

const Geometry& geo() { return hsrg::test::geometry(); }
const SrgGraph& graph() { return hsrg::test::graph(); }

// |GU(n, q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - (-1)^i)
std::uint64_t gu_order(int n, std::uint64_t q) {
  std::uint64_t r = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) r *= q;
  std::uint64_t qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= q;
    r *= (i % 2 == 0) ? qi - 1 : qi + 1;
  }
  return r;
}

// Counts matrices whose columns are orthonormal for the standard form, by
// backtracking over all 256 vectors per column.
std::uint64_t count_unitary_matrices() {
  const UnitaryPolarity pol;
  std::vector<Vec4> all;
  for (int code = 0; code < 256; ++code)
    all.push_back({Gf4(static_cast<std::uint8_t>((code >> 6) & 3)), Gf4(static_cast<std::uint8_t>((code >> 4) & 3)),
                   Gf4(static_cast<std::uint8_t>((code >> 2) & 3)), Gf4(static_cast<std::uint8_t>(code & 3))});
  std::vector<Vec4> cols;
  std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
    if (cols.size() == 4) return 1;
    std::uint64_t n = 0;
    for (const auto& v : all) {
      if (hermitian_eval(pol, v, v) != Gf4::one()) continue;
      bool orth = true;
      for (const auto& c : cols) orth = orth && hermitian_eval(pol, v, c).is_zero();
      if (!orth) continue;
      cols.push_back(v);
      n += rec();
      cols.pop_back();
    }
    return n;
  };
  return rec();
}

std::vector<Permutation> vertex_perms(const std::vector<UnitaryCollineation>& gens) {
  std::vector<Permutation> out;
  for (const auto& c : gens) out.push_back(induce_vertex_permutation(c, geo()));
  return out;
}

}  // namespace

TEST(Symmetry, UnitaryExamples) {
  EXPECT_TRUE(is_unitary(identity_matrix()));
  for (const auto& g : fallback_generators()) EXPECT_TRUE(is_unitary(g.matrix));
  Mat4 bad = identity_matrix();
  bad[0][1] = Gf4::one();
  EXPECT_FALSE(is_unitary(bad));
}

TEST(Symmetry, UnitaryGroupOrderOracle) {
  EXPECT_EQ(gu_order(4, 2), 77760u);
  EXPECT_EQ(count_unitary_matrices(), gu_order(4, 2));
}

TEST(Symmetry, GeneratorsPreserveSurface) {
  const auto search = find_unitary_generators(1, 3);
  auto gens = search.linear;
  gens.push_back(search.frobenius);
  for (const auto& g : gens) {
    if (!g.semilinear) {
      EXPECT_TRUE(is_unitary(g.matrix));
    }
    const auto pm = point_map(g);
    EXPECT_EQ(std::set<int>(pm.begin(), pm.end()).size(), 85u);
    for (int p : geo().surface.points) EXPECT_TRUE(geo().surface.contains(pm[p]));
    const auto sq = induce_subquadrangle_permutation(g, geo());
    for (const auto& a : geo().subquadrangles)
      for (const auto& b : geo().subquadrangles)
        EXPECT_EQ(meet_size(a, b), meet_size(geo().subquadrangles[sq[a.id]], geo().subquadrangles[sq[b.id]]));
    EXPECT_TRUE(is_automorphism(induce_vertex_permutation(g, geo()), graph()));
  }
  EXPECT_TRUE(is_identity(induce_vertex_permutation({identity_matrix(), false}, geo())));
}

TEST(Symmetry, PermutationHelpers) {
  const Permutation a{1, 2, 0}, b{0, 2, 1};
  EXPECT_TRUE(is_identity(compose(a, inverse(a))));
  EXPECT_EQ(compose(a, b), (Permutation{2, 1, 0}));
  EXPECT_FALSE(is_automorphism(Permutation{1, 0}, graph()));
}

TEST(Symmetry, Transitivity) {
  const auto gens = vertex_perms(find_unitary_generators(1, 2).linear);
  EXPECT_EQ(verify_transitivity(gens, 0), 216);
  const std::vector<Permutation> id{identity_permutation(216)};
  EXPECT_EQ(verify_transitivity(id, 5), 1);
  EXPECT_EQ(orbit(id, 5), std::vector<int>{5});
}

TEST(Symmetry, FallbackGeneratorsGiveLinearGroup) {
  const auto gens = fallback_generators();
  std::vector<Permutation> perms;
  for (const auto& c : gens) perms.push_back(induce_combined_permutation(c, geo()));
  // GU(4,2) modulo its centre of order q + 1 = 3.
  EXPECT_EQ(group_order(perms), gu_order(4, 2) / 3);
}

TEST(Symmetry, GroupReport) {
  const auto r = analyse_group(geo(), graph(), 1);
  const std::uint64_t pgu = gu_order(4, 2) / 3;
  EXPECT_EQ(r.linear_order, pgu);
  EXPECT_EQ(r.full_order, 2 * pgu);
  EXPECT_EQ(r.linear_vertex_orbit, 216);
  EXPECT_EQ(r.vertex_orbit, 216);
  EXPECT_EQ(r.subquadrangle_orbit, 36);
  EXPECT_EQ(r.vertex_stabilizer * 216, r.full_order);
  EXPECT_EQ(r.subquadrangle_stabilizer * 36, r.full_order);
  EXPECT_EQ(r.vertex_stabilizer, 240u);
  EXPECT_EQ(r.subquadrangle_stabilizer, 1440u);
  EXPECT_TRUE(r.all_automorphisms);
}

TEST(Symmetry, StabilizerChainMembership) {
  const auto gens = fallback_generators();
  std::vector<Permutation> perms;
  for (const auto& c : gens) perms.push_back(induce_combined_permutation(c, geo()));
  const StabilizerChain chain(252, perms);
  const auto extra = find_unitary_generators(9, 2).linear;
  for (const auto& c : extra) EXPECT_TRUE(chain.contains(induce_combined_permutation(c, geo())));
  EXPECT_FALSE(chain.contains(induce_combined_permutation({identity_matrix(), true}, geo())));
}

TEST(Symmetry, Determinism) {
  const auto a = find_unitary_generators(42, 3);
  const auto b = find_unitary_generators(42, 3);
  ASSERT_EQ(a.linear.size(), b.linear.size());
  for (std::size_t i = 0; i < a.linear.size(); ++i) EXPECT_EQ(a.linear[i], b.linear[i]);
  EXPECT_EQ(a.trials, b.trials);
}

TEST(Symmetry, SearchErrors) {
  EXPECT_THROW(find_unitary_generators(1, 1), std::invalid_argument);
  EXPECT_THROW(find_unitary_generators(1, 2, 3, false), TimeoutError);
  const auto fb = find_unitary_generators(1, 2, 3, true);
  EXPECT_TRUE(fb.used_fallback);
  EXPECT_EQ(fb.linear, fallback_generators());
}
