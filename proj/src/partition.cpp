#include "mdroute/partition.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "mdroute/error.hpp"
#include "mdroute/generators.hpp"

namespace mdroute {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::voronoi: return "voronoi";
    case SchemeKind::level: return "level";
    case SchemeKind::local: return "local";
  }
  return "unknown";
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "voronoi") return SchemeKind::voronoi;
  if (name == "level") return SchemeKind::level;
  if (name == "local") return SchemeKind::local;
  throw InputError("unknown partition scheme '" + name + "'");
}

PartitionScheme::PartitionScheme(DepotConfig depots) : depots_(std::move(depots)) {
  if (depots_.depots.empty()) throw InputError("partition scheme needs at least one depot");
  for (const auto& x : depots_.depots) depots_.space.check(x);
}

// ---------------------------------------------------------------- Voronoi

VoronoiPartition::VoronoiPartition(DepotConfig depots) : PartitionScheme(std::move(depots)) {
  if (depots_.space.kind() == SpaceKind::euclidean) {
    block_ = simd::PointBlock(depots_.space.dim(), servers());
    for (std::size_t i = 0; i < servers(); ++i) block_.set(i, depots_.depot(i).coords());
  }
}

std::size_t VoronoiPartition::assign(const Point& p) const {
  const std::size_t m = servers();
  std::vector<double> d(m);
  if (depots_.space.kind() == SpaceKind::euclidean) {
    depots_.space.check(p);
    std::vector<double> sq(block_.stride());
    simd::squared_distances(p.coords(), block_, sq);
    for (std::size_t i = 0; i < m; ++i) d[i] = std::sqrt(sq[i]);
  } else {
    for (std::size_t i = 0; i < m; ++i) d[i] = depots_.space.dist(p, depots_.depot(i));
  }
  double best = std::numeric_limits<double>::infinity();
  for (double v : d) best = std::min(best, v);
  for (std::size_t i = 0; i < m; ++i) {
    if (d[i] <= best + kGeomTol) return i;
  }
  return 0;
}

// ---------------------------------------------------------------- Level

std::size_t LevelTable::padding() const noexcept {
  if (server_of.empty()) return 0;
  const std::size_t real = server_of.back() + 1;
  return virtual_count() - real;
}

LevelTable level_build(const DepotConfig& cfg, double lambda) {
  if (!(lambda > 0.5 && lambda < 1.0)) throw InputError("level partition: lambda must lie in (1/2, 1)");
  const std::size_t m = cfg.size();
  if (m == 0) throw InputError("level partition needs at least one depot");
  const auto& space = cfg.space;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const double gap = space.dist(cfg.depots[i], cfg.depots[j]) + space.dist(cfg.depots[j], cfg.depots[k]) -
                           space.dist(cfg.depots[i], cfg.depots[k]);
        if (std::abs(gap) > kGeomTol) {
          throw PreconditionError("level partition: depots " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                  ", " + std::to_string(k + 1) + " are not collinear in order");
        }
      }
    }
  }

  LevelTable t;
  t.lambda = lambda;
  while ((std::size_t{1} << t.k) + 1 < m) ++t.k;
  const std::size_t top = std::size_t{1} << t.k;
  const std::size_t count = top + 1;

  t.server_of.resize(count);
  for (std::size_t i = 0; i < count; ++i) t.server_of[i] = std::min(i, m - 1);

  t.level_of.resize(count);
  t.by_level.assign(t.k + 2, {});
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t l;
    if (i == 0) {
      l = t.k + 1;
    } else if (i == top) {
      l = t.k;
    } else {
      l = static_cast<std::size_t>(std::countr_zero(i));
    }
    t.level_of[i] = l;
    t.by_level[l].push_back(i);
  }

  auto x = [&](std::size_t i) -> const Point& { return cfg.depots[t.server_of[i]]; };
  auto d = [&](std::size_t a, std::size_t b) { return space.dist(x(a), x(b)); };
  t.tau.assign(count, {});
  for (std::size_t i = 1; i < top; ++i) {
    const std::size_t step = std::size_t{1} << t.level_of[i];
    const std::size_t lo = i - step;
    const std::size_t hi = i + step;
    t.tau[i] = {{lo, d(lo, i) + lambda * d(hi, i)}, {hi, d(hi, i) + lambda * d(lo, i)}};
  }
  t.tau[top] = {{top, lambda * d(0, top)}};
  return t;
}

LevelPartition::LevelPartition(DepotConfig depots, double lambda)
    : PartitionScheme(std::move(depots)), table_(level_build(depots_, lambda)) {}

bool LevelPartition::in_tau(std::size_t i, const Point& p) const {
  for (const auto& disk : table_.tau.at(i)) {
    if (!(depots_.space.dist(p, virtual_depot(disk.center)) <= disk.radius + kGeomTol)) return false;
  }
  return true;
}

std::size_t LevelPartition::assign_virtual(const Point& p) const {
  depots_.space.check(p);
  for (const auto& level : table_.by_level) {
    for (std::size_t i : level) {
      if (in_tau(i, p)) return i;
    }
  }
  return 0;  // tau_0 is the whole space; not reached
}

std::size_t LevelPartition::assign(const Point& p) const { return table_.server_of[assign_virtual(p)]; }

// ---------------------------------------------------------------- Local

LocalPartition::LocalPartition(DepotConfig depots, double radius_divisor)
    : PartitionScheme(std::move(depots)), radius_(0.0) {
  if (!(radius_divisor > 0.0)) throw InputError("local partition: radius divisor must be positive");
  if (servers() >= 2) radius_ = min_depot_distance(depots_) / radius_divisor;
}

std::size_t LocalPartition::assign(const Point& p) const {
  const std::size_t m = servers();
  depots_.space.check(p);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (depots_.space.dist(p, depots_.depot(i)) < radius_) return i;
  }
  return m - 1;
}

// ---------------------------------------------------------------- common

std::unique_ptr<PartitionScheme> make_scheme(SchemeKind kind, const DepotConfig& depots, const SchemeOptions& options) {
  switch (kind) {
    case SchemeKind::voronoi: return std::make_unique<VoronoiPartition>(depots);
    case SchemeKind::level: return std::make_unique<LevelPartition>(depots, options.lambda);
    case SchemeKind::local: return std::make_unique<LocalPartition>(depots, options.local_radius_divisor);
  }
  throw InputError("unknown scheme");
}

std::vector<std::vector<std::size_t>> assign_all(const PartitionScheme& scheme, std::span<const Point> requests) {
  std::vector<std::vector<std::size_t>> sets(scheme.servers());
  for (std::size_t j = 0; j < requests.size(); ++j) sets[scheme.assign(requests[j])].push_back(j);
  return sets;
}

std::vector<std::vector<std::size_t>> assign_all(const PartitionScheme& scheme, const OfflineInstance& inst) {
  return assign_all(scheme, inst.requests);
}

}  // namespace mdroute
