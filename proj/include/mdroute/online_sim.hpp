#pragma once

#include <cstddef>
#include <vector>

#include "mdroute/instance.hpp"
#include "mdroute/offline_eval.hpp"
#include "mdroute/partition.hpp"
#include "mdroute/tsp.hpp"

namespace mdroute {

/// Unit-speed motion over [start, end]. A wait has from == to.
struct Segment {
  double start = 0.0;
  double end = 0.0;
  Point from;
  Point to;

  bool is_wait() const { return from == to; }
};

/// Arrival of the server at a request location as part of a planned tour.
struct Visit {
  double time = 0.0;
  std::size_t request = 0;
};

/// Trajectory of one server: contiguous segments from t = 0, at the depot
/// before the first segment and at the last endpoint after the last one.
struct ServerTimeline {
  std::size_t server = 0;
  Point depot;
  std::vector<Segment> segments;
  std::vector<Visit> visits;

  double end_time() const noexcept { return segments.empty() ? 0.0 : segments.back().end; }
  Point position_at(const MetricSpace& space, double t) const;
};

/// Earliest t >= not_before with the server at its depot.
double first_depot_time(const MetricSpace& space, const ServerTimeline& timeline, double not_before);

struct OnlineCostReport {
  /// c_j per request.
  std::vector<double> completion;
  /// ALG_i: first time at the depot once every request is complete.
  std::vector<double> per_server;
  /// Time each server finishes its own last planned tour.
  std::vector<double> route_end;
  double total = 0.0;
  std::vector<ServerTimeline> timelines;
};

/// The distributed online algorithm: each server keeps to its region; on a
/// release in its region it abandons its current route, returns straight to
/// its depot and runs the exact tour over every request of its region
/// released so far (visited ones included). Releases with equal dates are
/// handled together. Incidental passes over a request do not complete it.
OnlineCostReport run_doa(const PartitionScheme& scheme, const OnlineInstance& inst, const TspOptions& tsp = {});

/// max(m * r_n, OPT of the request locations).
double opt_online_lower_bound(const OnlineInstance& inst, const OptLimits& limits = {});

struct ReductionCheck {
  double doa_total = 0.0;
  /// DIS of the scheme on the request locations.
  double dis_locations = 0.0;
  /// 2 * m * r_n + dis_locations.
  double rhs_bound = 0.0;
  bool holds = false;
  double lower_bound = 0.0;
  /// doa_total / lower_bound, an upper estimate of the realized competitive ratio.
  double realized_ratio = 1.0;
  /// Per server: route_end_i <= 2 r_n + TSP_i(R^i).
  std::vector<bool> route_bound_holds;
};

/// Checks DOA(I) <= 2 m r_n + DIS(locations) within kGeomTol.
ReductionCheck check_reduction(const PartitionScheme& scheme, const OnlineInstance& inst, const OptLimits& limits = {});

}  // namespace mdroute
