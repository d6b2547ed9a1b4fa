#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hsrg/gq.hpp"
#include "hsrg/subquadrangles.hpp"
#include "support.hpp"

using namespace hsrg;

namespace {

const Geometry& geo() { return hsrg::test::geometry(); }
const std::vector<Subquadrangle>& subs() { return geo().subquadrangles; }

// Five points of w in general position: four independent points and a fifth
// outside every face they span.
std::array<int, 5> frame_in(const Subquadrangle& w, std::mt19937_64& rng) {
  const auto& space = ProjectiveSpace::instance();
  std::uniform_int_distribution<std::size_t> pick(0, w.points.size() - 1);
  for (;;) {
    std::array<int, 5> f{};
    for (int& p : f) p = w.points[pick(rng)];
    bool general = true;
    for (int skip = 0; skip < 5 && general; ++skip) {
      std::array<int, 4> four{};
      for (int i = 0, k = 0; i < 5; ++i)
        if (i != skip) four[k++] = f[i];
      general = space.span_rank(four) == 4;
    }
    if (general) return f;
  }
}

}  // namespace

TEST(Subquadrangles, CountMatchesGroupIndex) {
  // |PSU(4,2)| / |PSp(4,2)| = 25920 / 720
  EXPECT_EQ(subs().size(), static_cast<std::size_t>(25920 / 720));
  EXPECT_EQ(kNumSubquadrangles, 36);
  for (std::size_t i = 0; i < subs().size(); ++i) EXPECT_EQ(subs()[i].id, static_cast<int>(i));
}

TEST(Subquadrangles, EachIsBaerSubgeometryOnSurface) {
  const auto& space = ProjectiveSpace::instance();
  std::mt19937_64 rng(36);
  for (const auto& w : subs()) {
    ASSERT_EQ(w.points.size(), 15u);
    EXPECT_EQ(w.mask & ~geo().surface.mask, PointSet{});
    EXPECT_EQ(space.span_rank(w.points), 4);
    for (const auto& l : space.lines()) {
      const auto n = (l.mask & w.mask).count();
      EXPECT_TRUE(n == 0 || n == 1 || n == 3) << "line " << l.index << " meets subquadrangle " << w.id << " in " << n;
    }
    for (int t = 0; t < 5; ++t) EXPECT_EQ(space.baer_closure(frame_in(w, rng)).points, w.points);
  }
}

TEST(Subquadrangles, GeneralizedQuadrangle22) {
  for (const auto& w : subs()) {
    ASSERT_EQ(w.generators.size(), 15u);
    for (const auto& g : w.generators) EXPECT_TRUE(geo().surface.is_generator(g.line));
    EXPECT_EQ(gq_violation(w.mask, w.generator_masks(), 2, 2), std::nullopt) << w.id;
  }
}

TEST(Subquadrangles, ReverseEnumerationAgrees) {
  const auto rev = enumerate_subquadrangles(geo().surface, 1, true);
  ASSERT_EQ(rev.size(), subs().size());
  for (std::size_t i = 0; i < rev.size(); ++i) EXPECT_EQ(rev[i].points, subs()[i].points);
}

TEST(Subquadrangles, PairSplit) {
  int three = 0, six = 0;
  for (const auto& a : subs()) {
    int a3 = 0, a6 = 0;
    for (const auto& b : subs()) {
      if (a.id == b.id) continue;
      const auto pc = classify_pair(geo().surface, a, b);
      if (pc.kind == PairKind::ThreeOnGenerator) {
        ++a3;
        EXPECT_EQ(pc.meet.size(), 3u);
        EXPECT_TRUE(geo().surface.is_generator(pc.generator));
      } else {
        ++a6;
        EXPECT_EQ(pc.meet.size(), 6u);
        EXPECT_EQ(geo().surface.polar_line(pc.secants[0]), pc.secants[1]);
      }
    }
    EXPECT_EQ(a3, 15);
    EXPECT_EQ(a6, 20);
    three += a3;
    six += a6;
  }
  EXPECT_EQ(three / 2, 270);
  EXPECT_EQ(six / 2, 360);
  EXPECT_EQ(three / 2 + six / 2, 36 * 35 / 2);
  EXPECT_THROW(classify_pair(geo().surface, subs()[0], subs()[0]), std::invalid_argument);
}

TEST(Subquadrangles, SecantTriples) {
  const auto& h = geo().surface;
  std::map<std::set<int>, int> triples;
  for (int s : h.secants) {
    const auto t = triple_through_secant(h, subs(), s);
    EXPECT_EQ(t, triple_through_secant(h, subs(), h.polar_line(s)));
    const PointSet six = secant_pair_points(h, s);
    EXPECT_EQ(six.count(), 6u);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) EXPECT_EQ(subs()[t[i]].mask & subs()[t[j]].mask, six);
    ++triples[{t[0], t[1], t[2]}];
  }
  // 240 secants in polar pairs give 120 triples, each covering 3 six-meeting pairs.
  EXPECT_EQ(triples.size(), 120u);
  EXPECT_EQ(triples.size() * 3, 360u);
  EXPECT_THROW(triple_through_secant(h, subs(), h.generators[0]), std::invalid_argument);
}

TEST(Subquadrangles, CommonSixMeetCounts) {
  std::map<int, int> by_meet_three, by_meet_six;
  for (const auto& a : subs())
    for (const auto& b : subs()) {
      if (a.id >= b.id) continue;
      const int n = common_six_meet_count(subs(), a.id, b.id);
      EXPECT_EQ(n, common_six_meet_count(subs(), b.id, a.id));
      ++(meet_size(a, b) == 3 ? by_meet_three : by_meet_six)[n];
    }
  EXPECT_EQ(by_meet_three, (std::map<int, int>{{12, 270}}));
  EXPECT_EQ(by_meet_six, (std::map<int, int>{{10, 360}}));
}
