#include "mdroute/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mdroute/error.hpp"

namespace mdroute {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::below(0)");
  // Rejection keeps the draw unbiased and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  double u = unit();
  while (u == 0.0) u = unit();
  const double v = unit();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::line_voronoi: return "line_voronoi";
    case Family::simplex: return "simplex";
    case Family::local_adversarial: return "local_adversarial";
    case Family::random_line: return "random_line";
    case Family::random_bounded_ratio: return "random_bounded_ratio";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::line_voronoi, Family::simplex, Family::local_adversarial, Family::random_line,
                   Family::random_bounded_ratio}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown instance family '" + name + "'");
}

OfflineInstance gen_line_voronoi(std::size_t m, double k) {
  if (m < 2) throw InputError("line_voronoi needs m >= 2");
  if (!(k > 0.0)) throw InputError("line_voronoi needs k > 0");
  OfflineInstance inst{{MetricSpace::euclidean(2), {}}, {}, "line_voronoi"};
  for (std::size_t i = 1; i <= m; ++i) {
    inst.depots.depots.push_back(Point::euclidean({0.0, static_cast<double>(i)}));
    inst.requests.push_back(Point::euclidean({k, static_cast<double>(i)}));
  }
  return inst;
}

OfflineInstance gen_simplex(std::size_t m, double eps) {
  if (m < 2) throw InputError("simplex needs m >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("simplex needs 0 < eps < 1");
  OfflineInstance inst{{MetricSpace::euclidean(m), {}}, {}, "simplex"};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> e(m, 0.0);
    e[i] = 1.0;
    inst.depots.depots.push_back(Point::euclidean(e));
    e[i] = eps;
    inst.requests.push_back(Point::euclidean(std::move(e)));
  }
  return inst;
}

OfflineInstance gen_local_adversarial(double f) {
  if (!(f >= 1.0) || !std::isfinite(f)) throw InputError("local_adversarial needs f >= 1");
  OfflineInstance inst{{MetricSpace::line(), {}}, {}, "local_adversarial"};
  inst.depots.depots = {Point::on_line(0.0), Point::on_line(1.0), Point::on_line(f + 1.0)};
  inst.requests = {Point::on_line(1.25)};
  return inst;
}

double min_depot_distance(const DepotConfig& cfg) {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) lo = std::min(lo, cfg.space.dist(cfg.depots[i], cfg.depots[j]));
  }
  return lo;
}

double depot_distance_ratio(const DepotConfig& cfg) {
  if (cfg.size() < 2) return 1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      const double d = cfg.space.dist(cfg.depots[i], cfg.depots[j]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return hi / lo;
}

namespace {

constexpr double kLineSpan = 10.0;
constexpr double kLineMinGap = 0.05;

OfflineInstance random_line(const FamilyParams& p, Rng& rng) {
  OfflineInstance inst{{MetricSpace::euclidean(2), {}}, {}, "random_line"};
  std::vector<double> xs(p.m);
  bool accepted = false;
  for (std::size_t attempt = 0; attempt < p.max_attempts && !accepted; ++attempt) {
    for (auto& x : xs) x = rng.uniform(0.0, kLineSpan);
    std::sort(xs.begin(), xs.end());
    accepted = true;
    for (std::size_t i = 1; i < xs.size(); ++i) accepted = accepted && xs[i] - xs[i - 1] >= kLineMinGap;
  }
  if (!accepted) throw GenerationError("random_line: rejection budget exhausted placing depots");
  for (double x : xs) inst.depots.depots.push_back(Point::euclidean({x, 0.0}));
  for (std::size_t j = 0; j < p.n; ++j) {
    const double x = rng.uniform(-1.0, kLineSpan + 1.0);
    const double y = rng.uniform(-2.0, 2.0);
    inst.requests.push_back(Point::euclidean({x, y}));
  }
  return inst;
}

OfflineInstance random_bounded_ratio(const FamilyParams& p, Rng& rng) {
  if (!(p.f >= 1.0)) throw InputError("random_bounded_ratio needs f >= 1");
  const std::size_t dim = p.m;
  OfflineInstance inst{{MetricSpace::euclidean(dim), {}}, {}, "random_bounded_ratio"};
  bool accepted = false;
  for (std::size_t attempt = 0; attempt < p.max_attempts && !accepted; ++attempt) {
    const double scale = rng.uniform(1.0, 3.0);
    const double jitter = 0.5 * scale * (p.f - 1.0) / (p.f + 1.0);
    inst.depots.depots.clear();
    for (std::size_t i = 0; i < p.m; ++i) {
      std::vector<double> x(dim);
      for (std::size_t d = 0; d < dim; ++d) x[d] = (d == i ? scale : 0.0) + jitter * rng.uniform(-1.0, 1.0);
      inst.depots.depots.push_back(Point::euclidean(std::move(x)));
    }
    accepted = min_depot_distance(inst.depots) > 0.0 && depot_distance_ratio(inst.depots) <= p.f;
  }
  if (!accepted) throw GenerationError("random_bounded_ratio: rejection budget exhausted");

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const auto& x : inst.depots.depots) {
    for (std::size_t d = 0; d < dim; ++d) {
      lo[d] = std::min(lo[d], x.coords()[d]);
      hi[d] = std::max(hi[d], x.coords()[d]);
    }
  }
  const double min_gap = min_depot_distance(inst.depots);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::vector<double> q(dim);
    if (rng.unit() < 0.5) {
      const auto& c = inst.depots.depots[rng.below(p.m)].coords();
      double norm = 0.0;
      for (auto& v : q) {
        v = rng.normal();
        norm += v * v;
      }
      norm = std::sqrt(norm);
      const double radius = rng.uniform(0.0, 0.5) * min_gap;
      for (std::size_t d = 0; d < dim; ++d) q[d] = c[d] + (norm > 0.0 ? radius * q[d] / norm : 0.0);
    } else {
      for (std::size_t d = 0; d < dim; ++d) q[d] = rng.uniform(lo[d] - 0.5 * min_gap, hi[d] + 0.5 * min_gap);
    }
    inst.requests.push_back(Point::euclidean(std::move(q)));
  }
  return inst;
}

}  // namespace

OfflineInstance gen_random(const FamilyParams& p) {
  if (p.m < 2) throw InputError("random families need m >= 2");
  Rng rng(p.seed);
  switch (p.family) {
    case Family::random_line: return random_line(p, rng);
    case Family::random_bounded_ratio: return random_bounded_ratio(p, rng);
    default: break;
  }
  throw InputError("gen_random: '" + to_string(p.family) + "' is not a random family");
}

OfflineInstance generate(const FamilyParams& p) {
  switch (p.family) {
    case Family::line_voronoi: return gen_line_voronoi(p.m, p.k);
    case Family::simplex: return gen_simplex(p.m, p.eps);
    case Family::local_adversarial: return gen_local_adversarial(p.f);
    case Family::random_line:
    case Family::random_bounded_ratio: return gen_random(p);
  }
  throw InputError("unknown family");
}

OnlineInstance with_release_dates(const OfflineInstance& inst, double horizon, std::uint64_t seed) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw InputError("release horizon must be finite and >= 0");
  Rng rng(seed);
  std::vector<double> dates(inst.requests.size());
  for (auto& r : dates) r = rng.uniform(0.0, horizon);
  std::sort(dates.begin(), dates.end());
  OnlineInstance out{inst.depots, {}, inst.family};
  for (std::size_t j = 0; j < inst.requests.size(); ++j) out.requests.push_back({dates[j], inst.requests[j]});
  return out;
}

}  // namespace mdroute
