#pragma once

// Experiment drivers behind the mdroute CLI. Each command writes CSV with a
// header row; reals use 17 significant digits so rows are reproducible from
// (command, seed, limits). runtime_ms is the only nondeterministic column and
// is written as 0 when timing is disabled.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdroute/generators.hpp"
#include "mdroute/instance_io.hpp"
#include "mdroute/offline_eval.hpp"
#include "mdroute/online_sim.hpp"
#include "mdroute/partition.hpp"

namespace mdroute {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitValidation = 2, kExitCapacity = 3 };

/// Maps library exceptions to CLI exit codes.
int exit_code_for(const std::exception& e);

inline constexpr const char* kOfflineCsvHeader = "instance_id,family,m,n,scheme,dis,opt,ratio,runtime_ms";
inline constexpr const char* kOnlineCsvHeader =
    "instance_id,family,m,n,scheme,doa,bound,lower_bound,realized_ratio,holds,runtime_ms";
inline constexpr const char* kSummaryCsvHeader =
    "scheme,family,m,f,count,max_ratio,mean_ratio,bound,within_bound,log2_fit_c";

struct OfflineRow {
  std::string instance_id;
  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  SchemeKind scheme = SchemeKind::voronoi;
  double dis = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  double runtime_ms = 0.0;
  std::vector<double> per_server;
};

struct OnlineRow {
  std::string instance_id;
  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  SchemeKind scheme = SchemeKind::voronoi;
  ReductionCheck check;
  double runtime_ms = 0.0;
};

std::string csv_row(const OfflineRow& row, bool with_per_server = false);
std::string csv_row(const OnlineRow& row);

struct RunOptions {
  SchemeOptions scheme;
  OptLimits limits;
  OracleKind oracle = OracleKind::exact;
  bool timing = true;
};

OfflineRow eval_instance(const OfflineInstance& inst, const std::string& id, SchemeKind scheme, const RunOptions& opt);
/// Refuses with CapacityError rather than approximating OPT.
OfflineRow ratio_instance(const OfflineInstance& inst, const std::string& id, SchemeKind scheme, const RunOptions& opt);
OnlineRow online_instance(const OnlineInstance& inst, const std::string& id, SchemeKind scheme, const RunOptions& opt);

struct SweepSpec {
  SchemeKind scheme = SchemeKind::voronoi;
  Family family = Family::random_line;
  std::vector<std::size_t> ms{2, 3, 4};
  /// Ratio bounds for random_bounded_ratio; ignored by other families.
  std::vector<double> fs{2.0};
  std::size_t n = 6;
  std::uint64_t first_seed = 1;
  std::size_t seeds = 50;
  /// Online sweep: release dates drawn from [0, horizon].
  std::optional<double> horizon;
  std::size_t jobs = 1;
  RunOptions run;
};

struct SweepSummary {
  SchemeKind scheme;
  std::string family;
  std::size_t m;
  double f;
  std::size_t count;
  double max_ratio;
  double mean_ratio;
  /// Proven worst-case bound for this cell (m, 2 + 4f, or 9000 (log2(m-1) + 2)).
  double bound;
  bool within_bound;
};

struct SweepResult {
  std::vector<OfflineRow> rows;
  std::vector<OnlineRow> online_rows;
  std::vector<SweepSummary> summary;
  /// Least-squares c in max_ratio(m) ~ c log2(m) over the summary cells.
  double log2_fit_c = 0.0;
};

/// Instances are generated and evaluated in a fixed order; with jobs > 1 the
/// work is spread across threads and rows are still emitted in that order.
SweepResult run_sweep(const SweepSpec& spec);

void write_sweep(std::ostream& rows, std::ostream& summary, const SweepResult& result, bool online);

double proven_bound(SchemeKind scheme, std::size_t m, double f);

}  // namespace mdroute
