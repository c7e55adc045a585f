#include <atomic>
#include <cstdlib>
#include <cstring>

#include "mdroute/error.hpp"
#include "mdroute/simd/kernels.hpp"

namespace mdroute::simd {

#ifdef MDROUTE_HAVE_AVX2
const KernelTable* avx2_kernels_compiled();
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

PointBlock::PointBlock(std::size_t dim, std::size_t count)
    : dim_(dim), count_(count), stride_((count + 3) / 4 * 4), data_(dim * stride_, 0.0) {}

void PointBlock::set(std::size_t point, std::span<const double> coords) {
  if (point >= count_ || coords.size() != dim_) throw InputError("PointBlock::set: shape mismatch");
  for (std::size_t d = 0; d < dim_; ++d) data_[d * stride_ + point] = coords[d];
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(MDROUTE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* avx2_kernels() {
#ifdef MDROUTE_HAVE_AVX2
  if (cpu_supports(Isa::avx2)) return avx2_kernels_compiled();
#endif
  return nullptr;
}

namespace {

const KernelTable* pick_default() {
  const char* force = std::getenv("MDROUTE_FORCE_SCALAR");
  if (force && std::strcmp(force, "0") != 0 && *force) return &scalar_kernels();
  if (const auto* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> s{pick_default()};
  return s;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void set_active(Isa isa) {
  const KernelTable* t = nullptr;
  if (isa == Isa::scalar) t = &scalar_kernels();
  if (isa == Isa::avx2) t = avx2_kernels();
  if (!t) throw UnsupportedError(std::string("kernel ISA not available: ") + std::string(to_string(isa)));
  slot().store(t, std::memory_order_release);
}

double min_plus(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("min_plus: length mismatch");
  return active().min_plus(a.data(), b.data(), a.size());
}

void squared_distances(std::span<const double> query, const PointBlock& block, std::span<double> out) {
  if (query.size() != block.dim() || out.size() < block.count()) {
    throw InputError("squared_distances: shape mismatch");
  }
  active().squared_distances(query.data(), block.data(), block.dim(), block.count(), block.stride(),
                             out.data());
}

}  // namespace mdroute::simd
