#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdroute/metric.hpp"

namespace mdroute {

/// Server i starts and ends at depots[i]. Indices are 0-based in code and
/// 1-based in files and reports.
struct DepotConfig {
  MetricSpace space;
  std::vector<Point> depots;

  std::size_t size() const noexcept { return depots.size(); }
  const Point& depot(std::size_t server) const { return depots.at(server); }

  friend bool operator==(const DepotConfig&, const DepotConfig&) = default;
};

struct OfflineInstance {
  DepotConfig depots;
  std::vector<Point> requests;
  /// Free-form provenance tag carried through files and CSV rows.
  std::string family;

  const MetricSpace& space() const noexcept { return depots.space; }
  std::size_t servers() const noexcept { return depots.size(); }

  friend bool operator==(const OfflineInstance&, const OfflineInstance&) = default;
};

struct OnlineRequest {
  double release = 0.0;
  Point location;

  friend bool operator==(const OnlineRequest&, const OnlineRequest&) = default;
};

/// Requests are ordered by nondecreasing release date; equal dates keep file order.
struct OnlineInstance {
  DepotConfig depots;
  std::vector<OnlineRequest> requests;
  std::string family;

  const MetricSpace& space() const noexcept { return depots.space; }
  std::size_t servers() const noexcept { return depots.size(); }
  /// Largest release date, 0 for an empty instance.
  double last_release() const noexcept;

  friend bool operator==(const OnlineInstance&, const OnlineInstance&) = default;
};

/// Drops release dates.
OfflineInstance locations(const OnlineInstance& inst);

/// Throws ValidationError: empty depot list, points outside the space,
/// coincident depots, or (explicit spaces) a matrix failing the metric axioms.
void validate(const DepotConfig& depots);
void validate(const OfflineInstance& inst);
/// Additionally checks that release dates are finite, nonnegative and sorted.
void validate(const OnlineInstance& inst);

}  // namespace mdroute
