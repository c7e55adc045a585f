#include "mdroute/online_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdroute/error.hpp"

namespace mdroute {

Point ServerTimeline::position_at(const MetricSpace& space, double t) const {
  if (segments.empty() || t <= segments.front().start) return segments.empty() ? depot : segments.front().from;
  for (const auto& seg : segments) {
    if (t <= seg.end) {
      if (seg.is_wait() || seg.end <= seg.start) return seg.to;
      const double s = std::clamp((t - seg.start) / (seg.end - seg.start), 0.0, 1.0);
      return space.interpolate(seg.from, seg.to, s);
    }
  }
  return segments.back().to;
}

double first_depot_time(const MetricSpace& space, const ServerTimeline& tl, double not_before) {
  for (const auto& seg : tl.segments) {
    if (seg.end < not_before - kGeomTol) continue;
    if (seg.is_wait()) {
      if (seg.from == tl.depot) return std::max(seg.start, not_before);
      continue;
    }
    const double a = space.dist(seg.from, tl.depot);
    const double b = space.dist(tl.depot, seg.to);
    const double len = space.dist(seg.from, seg.to);
    if (a + b - len <= kGeomTol) {
      const double pass = seg.start + a;
      if (pass >= not_before - kGeomTol) return std::max(pass, not_before);
    }
  }
  // Parked at the final endpoint, which is the depot for every DOA timeline.
  return std::max(tl.end_time(), not_before);
}

namespace {

class ServerSim {
 public:
  ServerSim(const MetricSpace& space, std::size_t server, const Point& depot) : space_(space) {
    tl_.server = server;
    tl_.depot = depot;
  }

  // Drop everything planned after t and park the server at its position at t.
  void interrupt(double t) {
    const Point here = tl_.position_at(space_, t);
    while (!tl_.segments.empty() && tl_.segments.back().start >= t) tl_.segments.pop_back();
    if (!tl_.segments.empty() && tl_.segments.back().end > t) {
      tl_.segments.back().end = t;
      tl_.segments.back().to = here;
    }
    std::erase_if(tl_.visits, [t](const Visit& v) { return v.time > t; });
    const double end = tl_.end_time();
    if (end < t) tl_.segments.push_back({end, t, here, here});
  }

  void move_to(const Point& target) {
    const Point from = current();
    const double d = space_.dist(from, target);
    if (d <= 0.0) return;
    const double start = tl_.end_time();
    tl_.segments.push_back({start, start + d, from, target});
  }

  void visit(std::size_t request, const Point& where) {
    move_to(where);
    tl_.visits.push_back({tl_.end_time(), request});
  }

  Point current() const { return tl_.segments.empty() ? tl_.depot : tl_.segments.back().to; }
  ServerTimeline& timeline() { return tl_; }

 private:
  const MetricSpace& space_;
  ServerTimeline tl_;
};

}  // namespace

OnlineCostReport run_doa(const PartitionScheme& scheme, const OnlineInstance& inst, const TspOptions& tsp) {
  if (!inst.space().is_geodesic()) throw UnsupportedError("run_doa: explicit-matrix spaces have no motion model");
  if (!(scheme.depots() == inst.depots)) throw InputError("run_doa: scheme was built for different depots");
  for (std::size_t j = 1; j < inst.requests.size(); ++j) {
    if (inst.requests[j].release < inst.requests[j - 1].release) throw ValidationError("run_doa: release dates unsorted");
  }

  const std::size_t m = inst.servers();
  const std::size_t n = inst.requests.size();
  std::vector<std::vector<std::size_t>> region(m);
  for (std::size_t j = 0; j < n; ++j) region[scheme.assign(inst.requests[j].location)].push_back(j);

  OnlineCostReport report;
  report.completion.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < m; ++i) {
    ServerSim sim(inst.space(), i, inst.depots.depot(i));
    const auto& mine = region[i];
    std::size_t released = 0;
    while (released < mine.size()) {
      const double t = inst.requests[mine[released]].release;
      while (released < mine.size() && inst.requests[mine[released]].release == t) ++released;

      sim.interrupt(t);
      sim.move_to(inst.depots.depot(i));
      std::vector<Point> pts;
      for (std::size_t q = 0; q < released; ++q) pts.push_back(inst.requests[mine[q]].location);
      const Tour tour = tsp_exact(inst.space(), inst.depots.depot(i), pts, tsp);
      for (std::size_t idx : tour.order) sim.visit(mine[idx], pts[idx]);
      sim.move_to(inst.depots.depot(i));
    }
    for (const auto& v : sim.timeline().visits) {
      report.completion[v.request] = std::min(report.completion[v.request], v.time);
    }
    report.route_end.push_back(sim.timeline().end_time());
    report.timelines.push_back(std::move(sim.timeline()));
  }

  double last_completion = 0.0;
  for (double c : report.completion) last_completion = std::max(last_completion, c);
  for (const auto& tl : report.timelines) {
    report.per_server.push_back(first_depot_time(inst.space(), tl, last_completion));
    report.total += report.per_server.back();
  }
  return report;
}

double opt_online_lower_bound(const OnlineInstance& inst, const OptLimits& limits) {
  if (inst.requests.empty()) return 0.0;
  const double release_term = static_cast<double>(inst.servers()) * inst.last_release();
  return std::max(release_term, opt_offline(locations(inst), limits).total);
}

ReductionCheck check_reduction(const PartitionScheme& scheme, const OnlineInstance& inst, const OptLimits& limits) {
  TspOptions tsp;
  tsp.exact_cap = limits.exact_cap;
  const auto doa = run_doa(scheme, inst, tsp);
  const auto dis = dis_cost(scheme, locations(inst), OracleKind::exact, tsp);
  const double rn = inst.last_release();

  ReductionCheck out;
  out.doa_total = doa.total;
  out.dis_locations = dis.total;
  out.rhs_bound = 2.0 * static_cast<double>(inst.servers()) * rn + dis.total;
  out.holds = out.doa_total <= out.rhs_bound + kGeomTol;
  out.lower_bound = opt_online_lower_bound(inst, limits);
  out.realized_ratio = ratio_of(out.doa_total, out.lower_bound).ratio;
  for (std::size_t i = 0; i < inst.servers(); ++i) {
    out.route_bound_holds.push_back(doa.route_end[i] <= 2.0 * rn + dis.per_server[i] + kGeomTol);
  }
  return out;
}

}  // namespace mdroute
