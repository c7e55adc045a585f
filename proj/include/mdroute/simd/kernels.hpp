#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference; vector
// variants must return bit-identical results (no FMA, same per-lane
// operation order) and are chosen once at startup from CPU features.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mdroute::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Structure-of-arrays coordinate block: coordinate d of point k lives at
/// data[d * stride + k]. Stride is padded to a multiple of 4 lanes.
class PointBlock {
 public:
  PointBlock() = default;
  PointBlock(std::size_t dim, std::size_t count);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t count() const noexcept { return count_; }
  std::size_t stride() const noexcept { return stride_; }

  void set(std::size_t point, std::span<const double> coords);
  double at(std::size_t point, std::size_t d) const { return data_[d * stride_ + point]; }
  const double* data() const noexcept { return data_.data(); }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> data_;
};

struct KernelTable {
  Isa isa;
  /// min_k (a[k] + b[k]) over n entries; +inf when n == 0.
  double (*min_plus)(const double* a, const double* b, std::size_t n);
  /// out[k] = sum_d (block(k, d) - query[d])^2, summed in increasing d.
  void (*squared_distances)(const double* query, const double* block, std::size_t dim,
                            std::size_t count, std::size_t stride, double* out);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

/// Kernels used by the library. Defaults to the widest supported ISA;
/// MDROUTE_FORCE_SCALAR=1 in the environment pins the scalar table.
const KernelTable& active();
/// Overrides the active table; throws UnsupportedError if the ISA is unavailable.
void set_active(Isa isa);

double min_plus(std::span<const double> a, std::span<const double> b);
void squared_distances(std::span<const double> query, const PointBlock& block, std::span<double> out);

}  // namespace mdroute::simd
