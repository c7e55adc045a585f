#include "mdroute/instance.hpp"

#include <cmath>

#include "mdroute/error.hpp"

namespace mdroute {

double OnlineInstance::last_release() const noexcept {
  return requests.empty() ? 0.0 : requests.back().release;
}

OfflineInstance locations(const OnlineInstance& inst) {
  OfflineInstance out{inst.depots, {}, inst.family};
  out.requests.reserve(inst.requests.size());
  for (const auto& r : inst.requests) out.requests.push_back(r.location);
  return out;
}

namespace {

void check_point(const MetricSpace& space, const Point& p, const std::string& what) {
  if (!space.contains(p)) {
    try {
      space.check(p);
    } catch (const InputError& e) {
      throw ValidationError(what + ": " + e.what());
    }
  }
  for (double c : p.coords()) {
    if (!std::isfinite(c)) throw ValidationError(what + ": non-finite coordinate");
  }
}

}  // namespace

void validate(const DepotConfig& cfg) {
  if (cfg.depots.empty()) throw ValidationError("at least one depot is required");
  const auto report = validate_metric(cfg.space);
  if (!report.ok()) throw ValidationError("explicit matrix is not a metric: " + report.describe());
  for (std::size_t i = 0; i < cfg.depots.size(); ++i) {
    check_point(cfg.space, cfg.depots[i], "depot " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < cfg.depots.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.depots.size(); ++j) {
      if (!(cfg.space.dist(cfg.depots[i], cfg.depots[j]) > 0.0)) {
        throw ValidationError("depots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " coincide");
      }
    }
  }
}

void validate(const OfflineInstance& inst) {
  validate(inst.depots);
  for (std::size_t j = 0; j < inst.requests.size(); ++j) {
    check_point(inst.space(), inst.requests[j], "request " + std::to_string(j + 1));
  }
}

void validate(const OnlineInstance& inst) {
  validate(locations(inst));
  double prev = 0.0;
  for (std::size_t j = 0; j < inst.requests.size(); ++j) {
    const double r = inst.requests[j].release;
    if (!std::isfinite(r) || r < 0.0) {
      throw ValidationError("request " + std::to_string(j + 1) + ": release date must be finite and >= 0");
    }
    if (r < prev) {
      throw ValidationError("release dates must be nondecreasing (request " + std::to_string(j + 1) + ")");
    }
    prev = r;
  }
}

}  // namespace mdroute
