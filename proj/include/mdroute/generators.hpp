#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mdroute/instance.hpp"

namespace mdroute {

/// Portable uniform draws on top of std::mt19937_64 (whose output sequence
/// is fixed by the standard), so seeded instances match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

enum class Family { line_voronoi, simplex, local_adversarial, random_line, random_bounded_ratio };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

struct FamilyParams {
  Family family = Family::random_line;
  std::size_t m = 3;
  /// Request count (random families only).
  std::size_t n = 6;
  /// Horizontal offset of the line_voronoi requests.
  double k = 1.0;
  /// Request scale of the simplex family, in (0, 1).
  double eps = 0.1;
  /// Depot distance-ratio bound (local_adversarial, random_bounded_ratio).
  double f = 2.0;
  std::uint64_t seed = 1;
  /// Rejection budget for random_bounded_ratio and random_line spacing.
  std::size_t max_attempts = 10000;
};

/// Depots (0,i), requests (k,j) for i, j = 1..m in the plane.
OfflineInstance gen_line_voronoi(std::size_t m, double k);
/// Depots e_i, requests eps * e_j in m-dimensional space.
OfflineInstance gen_simplex(std::size_t m, double eps);
/// Line depots 0, 1, f + 1 with one request at 1.25.
OfflineInstance gen_local_adversarial(double f);

/// random_line: m depots on the x-axis of the plane in increasing order,
///   requests scattered in the strip [-1, 11] x [-2, 2].
/// random_bounded_ratio: perturbed scaled simplex in m dimensions, accepted
///   only when max/min depot distance <= f; half of the requests fall near a
///   depot, the rest anywhere in the depots' bounding box.
/// Throws InputError for deterministic families, GenerationError when the
/// rejection budget runs out.
OfflineInstance gen_random(const FamilyParams& params);

/// Dispatches on params.family, deterministic families included.
OfflineInstance generate(const FamilyParams& params);

/// Attaches sorted release dates drawn uniformly from [0, horizon].
OnlineInstance with_release_dates(const OfflineInstance& inst, double horizon, std::uint64_t seed);

/// max/min over distinct depot pairs; 1 for fewer than two depots.
double depot_distance_ratio(const DepotConfig& depots);
double min_depot_distance(const DepotConfig& depots);

}  // namespace mdroute
