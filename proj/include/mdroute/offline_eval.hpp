#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdroute/instance.hpp"
#include "mdroute/partition.hpp"
#include "mdroute/tsp.hpp"

namespace mdroute {

enum class OracleKind { exact, heuristic };

std::string to_string(OracleKind kind);
OracleKind oracle_from_string(const std::string& name);

struct CostReport {
  SchemeKind scheme = SchemeKind::voronoi;
  OracleKind oracle = OracleKind::exact;
  std::vector<double> per_server;
  std::vector<Tour> tours;
  double total = 0.0;
};

/// Sum over servers of the tour length through the requests in their region.
/// With the exact oracle each region must fit the exact cap (CapacityError).
CostReport dis_cost(const PartitionScheme& scheme, const OfflineInstance& inst, OracleKind oracle = OracleKind::exact,
                    const TspOptions& tsp = {});

struct OptLimits {
  /// Upper bound on m^n, the number of assignment vectors.
  std::uint64_t budget = 10'000'000;
  std::size_t exact_cap = TspOptions{}.exact_cap;
  /// Skip branches whose committed partial tours already exceed the incumbent.
  bool prune = true;
};

struct OptResult {
  /// assignment[j] = 0-based server of request j.
  std::vector<std::size_t> assignment;
  std::vector<double> per_server;
  double total = 0.0;
  /// Complete assignment vectors scored.
  std::uint64_t enumerated = 0;
  /// Partial assignments cut by the lower bound.
  std::uint64_t pruned = 0;
};

/// Minimum over all m^n request-to-server assignments of the summed exact
/// tour lengths. Among assignments within kGeomTol of the optimum the
/// lexicographically smallest vector wins. Throws CapacityError when m^n
/// exceeds the budget or n exceeds the exact cap.
OptResult opt_offline(const OfflineInstance& inst, const OptLimits& limits = {});

/// Cheap lower bound on OPT: 2 * max_j min_i d(x_i, l_j).
double opt_lower_bound(const OfflineInstance& inst);

struct RatioResult {
  double dis = 0.0;
  double opt = 0.0;
  /// dis/opt; 1 when both are 0; +inf when only opt is 0.
  double ratio = 1.0;
  bool unbounded = false;
};

RatioResult ratio_of(double dis, double opt);

RatioResult approx_ratio(const PartitionScheme& scheme, const OfflineInstance& inst, const OptLimits& limits = {});

}  // namespace mdroute
