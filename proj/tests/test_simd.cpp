#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mdroute/generators.hpp"
#include "mdroute/metric.hpp"
#include "mdroute/simd/kernels.hpp"

namespace mdroute::simd {
namespace {

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const auto* t = avx2_kernels()) out.push_back(t);
  return out;
}

TEST(KernelTest, ScalarMinPlusBasics) {
  const auto& k = scalar_kernels();
  const double a[] = {3, 1, 4};
  const double b[] = {1, 5, 0.5};
  EXPECT_EQ(k.min_plus(a, b, 3), 4.0);
  EXPECT_EQ(k.min_plus(a, b, 0), std::numeric_limits<double>::infinity());
}

TEST(KernelTest, ScalarSquaredDistancesBasics) {
  PointBlock block(2, 3);
  block.set(0, std::vector<double>{0, 0});
  block.set(1, std::vector<double>{3, 4});
  block.set(2, std::vector<double>{-1, 1});
  std::vector<double> out(block.stride());
  const double q[] = {0, 0};
  scalar_kernels().squared_distances(q, block.data(), 2, 3, block.stride(), out.data());
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[1], 25.0);
  EXPECT_EQ(out[2], 2.0);
}

TEST(KernelEquivalenceTest, MinPlusBitIdentical) {
  Rng rng(77);
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto* t : vector_tables()) {
    for (std::size_t n = 0; n <= 37; ++n) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(n), b(n);
        for (std::size_t k = 0; k < n; ++k) {
          a[k] = rng.unit() < 0.3 ? inf : rng.uniform(0, 100);
          b[k] = rng.uniform(0, 100);
        }
        const double ref = scalar_kernels().min_plus(a.data(), b.data(), n);
        const double got = t->min_plus(a.data(), b.data(), n);
        EXPECT_EQ(ref, got) << to_string(t->isa) << " n=" << n;
      }
    }
  }
}

TEST(KernelEquivalenceTest, SquaredDistancesBitIdentical) {
  Rng rng(78);
  for (const auto* t : vector_tables()) {
    for (std::size_t dim : {1u, 2u, 3u, 7u}) {
      for (std::size_t count : {1u, 3u, 4u, 5u, 16u, 33u}) {
        PointBlock block(dim, count);
        for (std::size_t k = 0; k < count; ++k) {
          std::vector<double> c(dim);
          for (auto& v : c) v = rng.uniform(-1e3, 1e3);
          block.set(k, c);
        }
        std::vector<double> q(dim);
        for (auto& v : q) v = rng.uniform(-1e3, 1e3);
        std::vector<double> ref(block.stride()), got(block.stride());
        scalar_kernels().squared_distances(q.data(), block.data(), dim, count, block.stride(), ref.data());
        t->squared_distances(q.data(), block.data(), dim, count, block.stride(), got.data());
        for (std::size_t k = 0; k < count; ++k) EXPECT_EQ(ref[k], got[k]) << "dim=" << dim << " k=" << k;
      }
    }
  }
}

TEST(KernelEquivalenceTest, KernelDistanceMatchesMetricDistance) {
  // sqrt of the kernel output must equal MetricSpace::dist exactly, so the
  // tour oracle and the metric agree on every length.
  Rng rng(79);
  const auto s = MetricSpace::euclidean(4);
  PointBlock block(4, 9);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < 9; ++k) {
    std::vector<double> c(4);
    for (auto& v : c) v = rng.uniform(-10, 10);
    pts.push_back(Point::euclidean(c));
    block.set(k, c);
  }
  std::vector<double> sq(block.stride());
  for (const KernelTable* t : {&scalar_kernels(), avx2_kernels()}) {
    if (!t) continue;
    t->squared_distances(pts[0].coords().data(), block.data(), 4, 9, block.stride(), sq.data());
    for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(std::sqrt(sq[k]), s.dist(pts[0], pts[k]));
  }
}

TEST(KernelDispatchTest, ActiveTableIsSupportedAndSwitchable) {
  const Isa original = active().isa;
  EXPECT_TRUE(cpu_supports(original));
  set_active(Isa::scalar);
  EXPECT_EQ(active().isa, Isa::scalar);
  if (cpu_supports(Isa::avx2)) {
    set_active(Isa::avx2);
    EXPECT_EQ(active().isa, Isa::avx2);
  } else {
    EXPECT_ANY_THROW(set_active(Isa::avx2));
  }
  set_active(original);
}

TEST(KernelDispatchTest, SpanWrappersCheckShapes) {
  std::vector<double> a(3), b(4);
  EXPECT_ANY_THROW(min_plus(a, b));
  PointBlock block(2, 2);
  std::vector<double> q(3), out(4);
  EXPECT_ANY_THROW(squared_distances(q, block, out));
}

}  // namespace
}  // namespace mdroute::simd
