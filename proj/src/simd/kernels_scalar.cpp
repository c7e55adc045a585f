#include <limits>

#include "mdroute/simd/kernels.hpp"

namespace mdroute::simd {

namespace {

double min_plus_scalar(const double* a, const double* b, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double v = a[k] + b[k];
    if (v < best) best = v;
  }
  return best;
}

void squared_distances_scalar(const double* query, const double* block, std::size_t dim,
                              std::size_t count, std::size_t stride, double* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double* row = block + d * stride;
    const double q = query[d];
    for (std::size_t k = 0; k < count; ++k) {
      const double diff = row[k] - q;
      out[k] = out[k] + diff * diff;
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, &min_plus_scalar, &squared_distances_scalar};
  return table;
}

}  // namespace mdroute::simd
