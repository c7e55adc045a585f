#include <gtest/gtest.h>

#include "mdroute/error.hpp"
#include "mdroute/generators.hpp"
#include "mdroute/partition.hpp"
#include "oracles.hpp"

namespace mdroute {
namespace {

DepotConfig line_depots(std::initializer_list<double> xs) {
  DepotConfig cfg{MetricSpace::line(), {}};
  for (double x : xs) cfg.depots.push_back(Point::on_line(x));
  return cfg;
}

// Examples below use 1-based server numbers as printed in reports; the API
// is 0-based.

TEST(VoronoiTest, Examples) {
  const VoronoiPartition vor(gen_line_voronoi(3, 5).depots);
  EXPECT_EQ(vor.assign(Point::euclidean({5, 2})) + 1, 2u);
  EXPECT_EQ(vor.assign(Point::euclidean({0, 3})) + 1, 3u);
  const VoronoiPartition tie(line_depots({0, 4}));
  EXPECT_EQ(tie.assign(Point::on_line(2)) + 1, 1u);
}

TEST(VoronoiPropertyTest, NearestDepot) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    FamilyParams p;
    p.family = trial % 2 ? Family::random_line : Family::random_bounded_ratio;
    p.m = 2 + trial % 6;
    p.seed = 1000 + trial;
    const auto inst = gen_random(p);
    const VoronoiPartition vor(inst.depots);
    for (int s = 0; s < 200; ++s) {
      std::vector<double> c(inst.space().dim());
      for (auto& v : c) v = rng.uniform(-3, 13);
      const Point q = Point::euclidean(c);
      const std::size_t i = vor.assign(q);
      for (std::size_t j = 0; j < p.m; ++j) {
        EXPECT_LE(inst.space().dist(q, inst.depots.depot(i)), inst.space().dist(q, inst.depots.depot(j)) + 1e-9);
      }
    }
  }
}

TEST(VoronoiTest, ExplicitMetric) {
  Rng rng(32);
  const auto s = oracle::random_closure_metric(8, rng);
  const VoronoiPartition vor(DepotConfig{s, {Point::node(0), Point::node(3), Point::node(5)}});
  for (std::size_t v = 0; v < 8; ++v) {
    const std::size_t i = vor.assign(Point::node(v));
    for (std::size_t d : {0u, 3u, 5u}) EXPECT_LE(s.dist(Point::node(v), vor.depots().depots[i]), s.dist(Point::node(v), Point::node(d)) + 1e-9);
  }
}

TEST(LevelBuildTest, Tables) {
  const auto t3 = level_build(line_depots({0, 1, 2}));
  EXPECT_EQ(t3.k, 1u);
  EXPECT_EQ(t3.by_level[0], (std::vector<std::size_t>{1}));
  EXPECT_EQ(t3.by_level[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(t3.by_level[2], (std::vector<std::size_t>{0}));
  EXPECT_EQ(t3.padding(), 0u);

  const auto t9 = level_build(line_depots({0, 1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(t9.k, 3u);
  EXPECT_EQ(t9.padding(), 0u);
  EXPECT_EQ(t9.by_level[0], (std::vector<std::size_t>{1, 3, 5, 7}));
  EXPECT_EQ(t9.by_level[1], (std::vector<std::size_t>{2, 6}));
  EXPECT_EQ(t9.by_level[2], (std::vector<std::size_t>{4}));
  EXPECT_EQ(t9.by_level[3], (std::vector<std::size_t>{8}));
  EXPECT_EQ(t9.by_level[4], (std::vector<std::size_t>{0}));

  // Smallest k with 2^k + 1 >= 4 is 2: five virtual indices, one copy.
  const auto t4 = level_build(line_depots({0, 1, 3, 7}));
  EXPECT_EQ(t4.k, 2u);
  EXPECT_EQ(t4.virtual_count(), 5u);
  EXPECT_EQ(t4.padding(), 1u);
  EXPECT_EQ(t4.server_of, (std::vector<std::size_t>{0, 1, 2, 3, 3}));
}

TEST(LevelBuildTest, LevelsPartitionIndices) {
  for (std::size_t m = 1; m <= 40; ++m) {
    DepotConfig cfg{MetricSpace::line(), {}};
    for (std::size_t i = 0; i < m; ++i) cfg.depots.push_back(Point::on_line(static_cast<double>(i * i)));
    const auto t = level_build(cfg);
    EXPECT_GE((std::size_t{1} << t.k) + 1, m);
    if (t.k > 0) {
      EXPECT_LT((std::size_t{1} << (t.k - 1)) + 1, m);
    }
    EXPECT_LE(t.padding(), m >= 3 ? m - 3 : 1);
    std::vector<int> seen(t.virtual_count(), 0);
    for (const auto& level : t.by_level) {
      for (std::size_t i : level) ++seen[i];
    }
    for (int c : seen) EXPECT_EQ(c, 1);
  }
}

TEST(LevelBuildTest, DiskParameters) {
  const auto t = level_build(line_depots({0, 1, 2}));
  ASSERT_EQ(t.tau[1].size(), 2u);
  EXPECT_EQ(t.tau[1][0].center, 0u);
  EXPECT_EQ(t.tau[1][0].radius, 1.75);
  EXPECT_EQ(t.tau[1][1].center, 2u);
  EXPECT_EQ(t.tau[1][1].radius, 1.75);
  ASSERT_EQ(t.tau[2].size(), 1u);
  EXPECT_EQ(t.tau[2][0].radius, 1.5);
  EXPECT_TRUE(t.tau[0].empty());
}

TEST(LevelBuildTest, Preconditions) {
  DepotConfig bent{MetricSpace::euclidean(2), {Point::euclidean({0, 0}), Point::euclidean({1, 1}), Point::euclidean({2, 0})}};
  EXPECT_THROW(level_build(bent), PreconditionError);
  // Collinear points in the wrong order also fail the ordered line condition.
  EXPECT_THROW(level_build(line_depots({0, 2, 1})), PreconditionError);
  EXPECT_THROW(level_build(line_depots({0, 1, 2}), 0.5), InputError);
  EXPECT_THROW(level_build(line_depots({0, 1, 2}), 1.0), InputError);
  EXPECT_NO_THROW(level_build(line_depots({0, 1, 2}), 0.6));
}

TEST(LevelAssignTest, Examples) {
  // tau_1 = {d(p,0) <= 1.75} n {d(p,2) <= 1.75}, tau_2 = {d(p,2) <= 1.5}.
  // Reported indices are the construction's own 0-based server labels.
  const LevelPartition lev(line_depots({0, 1, 2}));
  EXPECT_EQ(lev.assign(Point::on_line(1.0)), 1u);
  EXPECT_EQ(lev.assign(Point::on_line(3.0)), 2u);
  EXPECT_EQ(lev.assign(Point::on_line(-1.0)), 0u);
  // Closed disks: the boundary of tau_1 belongs to it.
  EXPECT_EQ(lev.assign(Point::on_line(1.75)), 1u);
  EXPECT_EQ(lev.assign(Point::on_line(1.75 + 1e-6)), 2u);
}

TEST(LevelAssignTest, PaddingMapsToLastServer) {
  const LevelPartition lev(line_depots({0, 1, 3, 7}));
  for (double x = -10; x <= 20; x += 0.01) {
    const std::size_t v = lev.assign_virtual(Point::on_line(x));
    EXPECT_EQ(lev.assign(Point::on_line(x)), std::min<std::size_t>(v, 3));
  }
}

TEST(LevelPropertyTest, MatchesRawDiskFormulas) {
  Rng rng(41);
  for (std::size_t m : {2u, 3u, 4u, 5u, 6u, 9u, 12u, 17u}) {
    for (std::size_t trial = 0; trial < 5; ++trial) {
      FamilyParams p;
      p.m = m;
      p.seed = 50 + trial;
      const auto inst = gen_random(p);
      const LevelPartition lev(inst.depots);
      std::vector<Point> padded = inst.depots.depots;
      while (padded.size() < lev.table().virtual_count()) padded.push_back(padded.back());
      for (int s = 0; s < 400; ++s) {
        const Point q = Point::euclidean({rng.uniform(-5, 15), rng.uniform(-6, 6)});
        const std::size_t v = oracle::level_reference(inst.space(), padded, 0.75, q);
        ASSERT_EQ(lev.assign_virtual(q), v);
        // Outside every tau of a strictly lower level.
        const std::size_t l = lev.table().level_of[v];
        for (std::size_t lower = 0; lower < l; ++lower) {
          for (std::size_t i : lev.table().by_level[lower]) EXPECT_FALSE(lev.in_tau(i, q));
        }
      }
    }
  }
}

TEST(LocalTest, Examples) {
  const LocalPartition loc(gen_local_adversarial(10).depots);
  EXPECT_EQ(loc.radius(), 0.25);
  EXPECT_EQ(loc.assign(Point::on_line(1.25)) + 1, 3u);
  EXPECT_EQ(loc.assign(Point::on_line(0.1)) + 1, 1u);
  EXPECT_EQ(loc.assign(Point::on_line(5)) + 1, 3u);
  EXPECT_EQ(loc.assign(Point::on_line(0.9)) + 1, 2u);
}

TEST(LocalPropertyTest, BoundaryIsExcluded) {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    FamilyParams p;
    p.family = Family::random_bounded_ratio;
    p.m = 2 + trial % 4;
    p.f = 3;
    p.seed = 300 + trial;
    const auto inst = gen_random(p);
    const LocalPartition loc(inst.depots);
    for (std::size_t i = 0; i + 1 < p.m; ++i) {
      for (int s = 0; s < 50; ++s) {
        // Point on the sphere of radius r around x_i, nudged outward until
        // its computed distance is not below r.
        std::vector<double> dir(p.m);
        double norm = 0;
        for (auto& v : dir) {
          v = rng.normal();
          norm += v * v;
        }
        norm = std::sqrt(norm);
        std::vector<double> c(p.m);
        const auto& x = inst.depots.depot(i).coords();
        double scale = loc.radius();
        Point q;
        do {
          for (std::size_t d = 0; d < p.m; ++d) c[d] = x[d] + scale * dir[d] / norm;
          q = Point::euclidean(c);
          scale = std::nextafter(scale, 1e300);
        } while (inst.space().dist(q, inst.depots.depot(i)) < loc.radius());
        EXPECT_NE(loc.assign(q), i);
      }
    }
  }
}

TEST(PartitionAxiomTest, TotalDeterministicRequestIndependent) {
  Rng rng(44);
  for (SchemeKind kind : {SchemeKind::voronoi, SchemeKind::level, SchemeKind::local}) {
    FamilyParams p;
    p.m = 5;
    p.n = 4;
    p.seed = 7;
    const auto inst = gen_random(p);
    const auto scheme = make_scheme(kind, inst.depots);
    std::vector<Point> samples;
    for (int s = 0; s < 2000; ++s) samples.push_back(Point::euclidean({rng.uniform(-5, 15), rng.uniform(-5, 5)}));
    const auto sets = assign_all(*scheme, samples);
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    EXPECT_EQ(total, samples.size());
    for (const auto& q : samples) {
      const std::size_t a = scheme->assign(q);
      EXPECT_LT(a, p.m);
      EXPECT_EQ(a, scheme->assign(q));
    }
    // A fresh scheme on the same depots, then evaluated in shuffled batches.
    const auto again = make_scheme(kind, inst.depots);
    std::vector<Point> shuffled(samples.rbegin(), samples.rend());
    const auto sets2 = assign_all(*again, shuffled);
    std::vector<std::size_t> owner(samples.size()), owner2(samples.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j : sets[i]) owner[j] = i;
      for (std::size_t j : sets2[i]) owner2[samples.size() - 1 - j] = i;
    }
    EXPECT_EQ(owner, owner2);
  }
}

TEST(AssignAllTest, Examples) {
  const VoronoiPartition vor(gen_line_voronoi(3, 5).depots);
  EXPECT_EQ(assign_all(vor, std::vector<Point>{}), std::vector<std::vector<std::size_t>>(3));
  const auto sets = assign_all(vor, gen_line_voronoi(3, 5));
  EXPECT_EQ(sets, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
  const auto adv = gen_local_adversarial(10);
  const LocalPartition loc(adv.depots);
  EXPECT_EQ(assign_all(loc, adv), (std::vector<std::vector<std::size_t>>{{}, {}, {0}}));
}

TEST(SchemeFactoryTest, NamesRoundTrip) {
  for (SchemeKind k : {SchemeKind::voronoi, SchemeKind::level, SchemeKind::local}) {
    EXPECT_EQ(scheme_from_string(to_string(k)), k);
  }
  EXPECT_THROW(scheme_from_string("kmeans"), InputError);
}

}  // namespace
}  // namespace mdroute
