#include "mdroute/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "mdroute/error.hpp"

namespace mdroute {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e)) return kExitCapacity;
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const PreconditionError*>(&e) ||
      dynamic_cast<const InputError*>(&e)) {
    return kExitValidation;
  }
  return kExitFailure;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since, bool timing) {
  if (!timing) return 0.0;
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string opt_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

}  // namespace

std::string csv_row(const OfflineRow& r, bool with_per_server) {
  std::ostringstream os;
  os << r.instance_id << ',' << r.family << ',' << r.m << ',' << r.n << ',' << to_string(r.scheme) << ','
     << format_real(r.dis) << ',' << opt_real(r.opt) << ',' << opt_real(r.ratio) << ',' << format_real(r.runtime_ms);
  if (with_per_server) {
    os << ',';
    for (std::size_t i = 0; i < r.per_server.size(); ++i) os << (i ? ";" : "") << format_real(r.per_server[i]);
  }
  return os.str();
}

std::string csv_row(const OnlineRow& r) {
  std::ostringstream os;
  os << r.instance_id << ',' << r.family << ',' << r.m << ',' << r.n << ',' << to_string(r.scheme) << ','
     << format_real(r.check.doa_total) << ',' << format_real(r.check.rhs_bound) << ','
     << format_real(r.check.lower_bound) << ',' << format_real(r.check.realized_ratio) << ','
     << (r.check.holds ? "true" : "false") << ',' << format_real(r.runtime_ms);
  return os.str();
}

OfflineRow eval_instance(const OfflineInstance& inst, const std::string& id, SchemeKind kind, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const auto scheme = make_scheme(kind, inst.depots, opt.scheme);
  TspOptions tsp;
  tsp.exact_cap = opt.limits.exact_cap;
  const auto cost = dis_cost(*scheme, inst, opt.oracle, tsp);
  OfflineRow row{id, inst.family, inst.servers(), inst.requests.size(), kind, cost.total, {}, {}, 0.0, cost.per_server};
  row.runtime_ms = elapsed_ms(t0, opt.timing);
  return row;
}

OfflineRow ratio_instance(const OfflineInstance& inst, const std::string& id, SchemeKind kind, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const auto scheme = make_scheme(kind, inst.depots, opt.scheme);
  TspOptions tsp;
  tsp.exact_cap = opt.limits.exact_cap;
  const auto best = opt_offline(inst, opt.limits);
  const auto cost = dis_cost(*scheme, inst, OracleKind::exact, tsp);
  const auto r = ratio_of(cost.total, best.total);
  OfflineRow row{id, inst.family, inst.servers(), inst.requests.size(), kind, cost.total, best.total, r.ratio, 0.0,
                 cost.per_server};
  row.runtime_ms = elapsed_ms(t0, opt.timing);
  return row;
}

OnlineRow online_instance(const OnlineInstance& inst, const std::string& id, SchemeKind kind, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const auto scheme = make_scheme(kind, inst.depots, opt.scheme);
  OnlineRow row{id, inst.family, inst.servers(), inst.requests.size(), kind, check_reduction(*scheme, inst, opt.limits)};
  row.runtime_ms = elapsed_ms(t0, opt.timing);
  return row;
}

double proven_bound(SchemeKind scheme, std::size_t m, double f) {
  switch (scheme) {
    case SchemeKind::voronoi: return static_cast<double>(m);
    case SchemeKind::local: return 2.0 + 4.0 * f;
    case SchemeKind::level: return 9000.0 * (std::log2(static_cast<double>(m > 1 ? m - 1 : 1)) + 2.0);
  }
  return 0.0;
}

namespace {

struct Job {
  std::size_t m;
  double f;
  std::uint64_t seed;
};

std::string job_id(const SweepSpec& spec, const Job& job) {
  std::ostringstream os;
  os << to_string(spec.family) << "-m" << job.m;
  if (spec.family == Family::random_bounded_ratio) os << "-f" << format_real(job.f);
  os << "-s" << job.seed;
  return os.str();
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.family != Family::random_line && spec.family != Family::random_bounded_ratio) {
    throw InputError("sweep needs a random family (random_line or random_bounded_ratio)");
  }
  const bool online = spec.horizon.has_value();
  const std::vector<double> fs =
      spec.family == Family::random_bounded_ratio ? spec.fs : std::vector<double>{std::numeric_limits<double>::quiet_NaN()};

  std::vector<Job> jobs;
  for (std::size_t m : spec.ms) {
    for (double f : fs) {
      for (std::size_t s = 0; s < spec.seeds; ++s) jobs.push_back({m, f, spec.first_seed + s});
    }
  }

  SweepResult out;
  out.rows.resize(online ? 0 : jobs.size());
  out.online_rows.resize(online ? jobs.size() : 0);
  std::vector<std::exception_ptr> errors(jobs.size());

  auto work = [&](std::size_t idx) {
    const Job& job = jobs[idx];
    FamilyParams p;
    p.family = spec.family;
    p.m = job.m;
    p.n = spec.n;
    p.f = std::isnan(job.f) ? 2.0 : job.f;
    p.seed = job.seed;
    const auto inst = gen_random(p);
    const auto id = job_id(spec, job);
    if (online) {
      out.online_rows[idx] = online_instance(with_release_dates(inst, *spec.horizon, job.seed), id, spec.scheme, spec.run);
    } else {
      out.rows[idx] = ratio_instance(inst, id, spec.scheme, spec.run);
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < jobs.size();) {
      try {
        work(idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.jobs, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Summary cells in (m, f) order.
  double num = 0.0, den = 0.0;
  for (std::size_t m : spec.ms) {
    for (double f : fs) {
      SweepSummary cell{spec.scheme, to_string(spec.family), m, f, 0, 0.0, 0.0, 0.0, true};
      double sum = 0.0;
      for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
        if (jobs[idx].m != m || !(jobs[idx].f == f || (std::isnan(f) && std::isnan(jobs[idx].f)))) continue;
        const double r = online ? out.online_rows[idx].check.realized_ratio : *out.rows[idx].ratio;
        cell.max_ratio = cell.count == 0 ? r : std::max(cell.max_ratio, r);
        sum += r;
        ++cell.count;
      }
      cell.mean_ratio = cell.count ? sum / static_cast<double>(cell.count) : 0.0;
      cell.bound = online ? std::numeric_limits<double>::quiet_NaN()
                          : proven_bound(spec.scheme, m, std::isnan(f) ? 0.0 : f);
      cell.within_bound = online || cell.max_ratio <= cell.bound + kGeomTol;
      if (online) {
        for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
          if (jobs[idx].m == m && (jobs[idx].f == f || (std::isnan(f) && std::isnan(jobs[idx].f)))) {
            cell.within_bound = cell.within_bound && out.online_rows[idx].check.holds;
          }
        }
      }
      if (m >= 2 && cell.count) {
        const double lg = std::log2(static_cast<double>(m));
        num += cell.max_ratio * lg;
        den += lg * lg;
      }
      out.summary.push_back(cell);
    }
  }
  out.log2_fit_c = den > 0.0 ? num / den : 0.0;
  return out;
}

void write_sweep(std::ostream& rows, std::ostream& summary, const SweepResult& result, bool online) {
  if (online) {
    rows << kOnlineCsvHeader << '\n';
    for (const auto& r : result.online_rows) rows << csv_row(r) << '\n';
  } else {
    rows << kOfflineCsvHeader << '\n';
    for (const auto& r : result.rows) rows << csv_row(r) << '\n';
  }
  summary << kSummaryCsvHeader << '\n';
  for (const auto& c : result.summary) {
    summary << to_string(c.scheme) << ',' << c.family << ',' << c.m << ',' << (std::isnan(c.f) ? "" : format_real(c.f))
            << ',' << c.count << ',' << format_real(c.max_ratio) << ',' << format_real(c.mean_ratio) << ','
            << (std::isnan(c.bound) ? "" : format_real(c.bound)) << ',' << (c.within_bound ? "true" : "false") << ','
            << format_real(result.log2_fit_c) << '\n';
  }
}

}  // namespace mdroute
