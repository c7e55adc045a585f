#include <immintrin.h>

#include <limits>

#include "mdroute/simd/kernels.hpp"

namespace mdroute::simd {

namespace {

double min_plus_avx2(const double* a, const double* b, std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  __m256d best = _mm256_set1_pd(inf);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d s = _mm256_add_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    best = _mm256_min_pd(best, s);
  }
  const __m128d lo = _mm256_castpd256_pd128(best);
  const __m128d hi = _mm256_extractf128_pd(best, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  double out = _mm_cvtsd_f64(m);
  for (; k < n; ++k) {
    const double v = a[k] + b[k];
    if (v < out) out = v;
  }
  return out;
}

void squared_distances_avx2(const double* query, const double* block, std::size_t dim,
                            std::size_t count, std::size_t stride, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t d = 0; d < dim; ++d) {
      const __m256d diff =
          _mm256_sub_pd(_mm256_loadu_pd(block + d * stride + k), _mm256_set1_pd(query[d]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < count; ++k) {
    double acc = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = block[d * stride + k] - query[d];
      acc = acc + diff * diff;
    }
    out[k] = acc;
  }
}

}  // namespace

const KernelTable* avx2_kernels_compiled() {
  static const KernelTable table{Isa::avx2, &min_plus_avx2, &squared_distances_avx2};
  return &table;
}

}  // namespace mdroute::simd
