#include "mdroute/offline_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdroute/error.hpp"

namespace mdroute {

std::string to_string(OracleKind kind) { return kind == OracleKind::exact ? "exact" : "heuristic"; }

OracleKind oracle_from_string(const std::string& name) {
  if (name == "exact") return OracleKind::exact;
  if (name == "heuristic") return OracleKind::heuristic;
  throw InputError("unknown oracle '" + name + "'");
}

CostReport dis_cost(const PartitionScheme& scheme, const OfflineInstance& inst, OracleKind oracle,
                    const TspOptions& tsp) {
  if (!(scheme.depots() == inst.depots)) throw InputError("dis_cost: scheme was built for different depots");
  CostReport report;
  report.scheme = scheme.kind();
  report.oracle = oracle;
  const auto sets = assign_all(scheme, inst);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Point> pts;
    pts.reserve(sets[i].size());
    for (std::size_t j : sets[i]) pts.push_back(inst.requests[j]);
    Tour t = oracle == OracleKind::exact ? tsp_exact(inst.space(), inst.depots.depot(i), pts, tsp)
                                         : tsp_heuristic(inst.space(), inst.depots.depot(i), pts, tsp);
    // Report tour orders against the instance's request list.
    for (auto& idx : t.order) idx = sets[i][idx];
    report.per_server.push_back(t.length);
    report.total += t.length;
    report.tours.push_back(std::move(t));
  }
  return report;
}

namespace {

struct Search {
  const std::vector<SubsetTourTable>& tables;
  std::size_t m;
  std::size_t n;
  bool prune;

  std::vector<std::uint32_t> masks;
  std::vector<std::size_t> current;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_assignment;
  std::uint64_t enumerated = 0;
  std::uint64_t pruned = 0;

  double committed() const {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += tables[i].tour_length(masks[i]);
    return s;
  }

  void run(std::size_t j) {
    if (j == n) {
      ++enumerated;
      const double cost = committed();
      if (cost < best - kGeomTol) {
        best = cost;
        best_assignment = current;
      }
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      masks[i] |= std::uint32_t{1} << j;
      current[j] = i;
      // Tour length is monotone in the visited set, so the committed partial
      // tours bound every completion from below.
      if (prune && committed() > best + kGeomTol) {
        ++pruned;
      } else {
        run(j + 1);
      }
      masks[i] &= ~(std::uint32_t{1} << j);
    }
  }
};

}  // namespace

OptResult opt_offline(const OfflineInstance& inst, const OptLimits& limits) {
  const std::size_t m = inst.servers();
  const std::size_t n = inst.requests.size();
  if (m == 0) throw InputError("opt_offline: no depots");

  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (combos > limits.budget / m) {
      throw CapacityError("opt_offline: " + std::to_string(m) + "^" + std::to_string(n) +
                          " assignments exceed the enumeration budget of " + std::to_string(limits.budget));
    }
    combos *= m;
  }
  if (combos > limits.budget) {
    throw CapacityError("opt_offline: enumeration budget of " + std::to_string(limits.budget) + " exceeded");
  }
  if (n > limits.exact_cap) {
    throw CapacityError("opt_offline: " + std::to_string(n) + " requests exceed the exact TSP cap of " +
                        std::to_string(limits.exact_cap));
  }

  std::vector<SubsetTourTable> tables;
  tables.reserve(m);
  for (std::size_t i = 0; i < m; ++i) tables.emplace_back(inst.space(), inst.depots.depot(i), inst.requests, limits.exact_cap);

  Search s{tables, m, n, limits.prune, std::vector<std::uint32_t>(m, 0), std::vector<std::size_t>(n, 0), std::numeric_limits<double>::infinity(), {}, 0, 0};
  s.run(0);

  OptResult out;
  out.assignment = s.best_assignment;
  out.enumerated = s.enumerated;
  out.pruned = s.pruned;
  std::vector<std::uint32_t> masks(m, 0);
  for (std::size_t j = 0; j < n; ++j) masks[out.assignment[j]] |= std::uint32_t{1} << j;
  for (std::size_t i = 0; i < m; ++i) {
    out.per_server.push_back(tables[i].tour_length(masks[i]));
    out.total += out.per_server.back();
  }
  return out;
}

double opt_lower_bound(const OfflineInstance& inst) {
  double lb = 0.0;
  for (const auto& l : inst.requests) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& x : inst.depots.depots) nearest = std::min(nearest, inst.space().dist(x, l));
    lb = std::max(lb, 2.0 * nearest);
  }
  return lb;
}

RatioResult ratio_of(double dis, double opt) {
  RatioResult r{dis, opt, 1.0, false};
  if (opt > 0.0) {
    r.ratio = dis / opt;
  } else if (dis > 0.0) {
    r.ratio = std::numeric_limits<double>::infinity();
    r.unbounded = true;
  }
  return r;
}

RatioResult approx_ratio(const PartitionScheme& scheme, const OfflineInstance& inst, const OptLimits& limits) {
  const auto opt = opt_offline(inst, limits);
  TspOptions tsp;
  tsp.exact_cap = limits.exact_cap;
  const auto dis = dis_cost(scheme, inst, OracleKind::exact, tsp);
  return ratio_of(dis.total, opt.total);
}

}  // namespace mdroute
