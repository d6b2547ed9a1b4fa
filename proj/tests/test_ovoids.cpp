#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hsrg/ovoids.hpp"
#include "support.hpp"

using namespace hsrg;

namespace {

const Geometry& geo() { return hsrg::test::geometry(); }

// Brute force over all C(15,5) subsets, written directly against the
// generator point lists.
std::set<std::array<int, 5>> brute_force_ovoids(const Subquadrangle& w) {
  std::set<std::array<int, 5>> out;
  const auto& p = w.points;
  for (int a = 0; a < 15; ++a)
    for (int b = a + 1; b < 15; ++b)
      for (int c = b + 1; c < 15; ++c)
        for (int d = c + 1; d < 15; ++d)
          for (int e = d + 1; e < 15; ++e) {
            const std::array<int, 5> s{p[a], p[b], p[c], p[d], p[e]};
            bool ok = true;
            for (const auto& g : w.generators) {
              int hits = 0;
              for (int x : g.points) hits += static_cast<int>(std::count(s.begin(), s.end(), x));
              ok = ok && hits == 1;
            }
            if (ok) out.insert(s);
          }
  return out;
}

}  // namespace

TEST(Ovoids, SixPerSubquadrangleMatchBruteForce) {
  ASSERT_EQ(geo().vertices.size(), static_cast<std::size_t>(kNumVertices));
  EXPECT_EQ(kNumVertices, 216);
  for (const auto& w : geo().subquadrangles) {
    const auto ovs = enumerate_ovoids(w);
    ASSERT_EQ(ovs.size(), 6u);
    std::set<std::array<int, 5>> got;
    for (const auto& o : ovs) {
      EXPECT_EQ(o.parent, w.id);
      EXPECT_EQ(o.id / 6, w.id);
      EXPECT_TRUE(std::is_sorted(o.points.begin(), o.points.end()));
      EXPECT_TRUE(is_ovoid_of(w, o.mask));
      got.insert(o.points);
    }
    EXPECT_EQ(got, brute_force_ovoids(w));
  }
}

TEST(Ovoids, SameParentMeetInOnePoint) {
  for (int w = 0; w < kNumSubquadrangles; ++w)
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        EXPECT_EQ((geo().vertices[6 * w + i].mask & geo().vertices[6 * w + j].mask).count(), 1u);
}

TEST(Ovoids, CapsWithSecantJoins) {
  const auto& space = ProjectiveSpace::instance();
  for (const auto& o : geo().vertices) {
    const auto& w = geo().parent(o);
    int joins = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        EXPECT_FALSE(joined_by_generator(w, o.points[i], o.points[j]));
        EXPECT_TRUE(geo().surface.is_secant(space.line_index(o.points[i], o.points[j])));
        ++joins;
      }
    EXPECT_EQ(joins, 10);
  }
}

TEST(Ovoids, UniqueOvoidThroughNoncollinearPair) {
  const auto& all = geo().vertices;
  for (const auto& w : geo().subquadrangles) {
    const std::span<const OvoidVertex> ovs(all.data() + 6 * w.id, 6);
    int pairs = 0;
    for (std::size_t i = 0; i < w.points.size(); ++i)
      for (std::size_t j = i + 1; j < w.points.size(); ++j) {
        const int p = w.points[i], q = w.points[j];
        if (joined_by_generator(w, p, q)) {
          EXPECT_THROW(ovoid_through_pair(w, ovs, p, q), StructureError);
          continue;
        }
        const auto& o = ovoid_through_pair(w, ovs, p, q);
        EXPECT_TRUE(o.mask.test(p) && o.mask.test(q));
        ++pairs;
      }
    EXPECT_EQ(pairs, 15 * 8 / 2);
    EXPECT_THROW(ovoid_through_pair(w, ovs, w.points[0], w.points[0]), std::invalid_argument);
  }
}

TEST(Ovoids, ParentLookup) {
  const auto& subs = geo().subquadrangles;
  for (const auto& o : geo().vertices) {
    EXPECT_EQ(parent_of(subs, o.points), o.parent);
    EXPECT_EQ(geo().find_vertex(o.points), o.id);
  }
  const auto& w = subs[0];
  const std::array<int, 5> line_plus{w.generators[0].points[0], w.generators[0].points[1], w.generators[0].points[2],
                                     w.generators[1].points[0], w.generators[1].points[1]};
  EXPECT_THROW(parent_of(subs, line_plus), LookupError);
  const std::array<int, 4> four{0, 1, 2, 3};
  EXPECT_THROW(parent_of(subs, four), LookupError);
  EXPECT_EQ(geo().find_vertex({0, 1, 2, 3, 4}), -1);
}
