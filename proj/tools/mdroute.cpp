// mdroute: generate instances, evaluate partition schemes against exact
// oracles, sweep random families and simulate the online algorithm.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "mdroute/error.hpp"
#include "mdroute/experiment.hpp"
#include "mdroute/simd/kernels.hpp"

namespace {

using namespace mdroute;

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct Common {
  std::string scheme = "voronoi";
  std::string oracle = "exact";
  std::uint64_t budget = OptLimits{}.budget;
  std::size_t exact_cap = OptLimits{}.exact_cap;
  double lambda = 0.75;
  double local_divisor = 4.0;
  bool no_timing = false;
  std::string out;

  RunOptions run() const {
    if (!(lambda > 0.5 && lambda < 1.0)) throw InputError("--lambda must lie in (1/2, 1)");
    RunOptions r;
    r.scheme.lambda = lambda;
    r.scheme.local_radius_divisor = local_divisor;
    r.limits.budget = budget;
    r.limits.exact_cap = exact_cap;
    r.oracle = oracle_from_string(oracle);
    r.timing = !no_timing;
    return r;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_oracle) {
  cmd->add_option("--scheme", c.scheme, "Partition scheme")
      ->check(CLI::IsMember({"voronoi", "level", "local"}))
      ->capture_default_str();
  if (with_oracle) {
    cmd->add_option("--oracle", c.oracle, "Per-server tour oracle")
        ->check(CLI::IsMember({"exact", "heuristic"}))
        ->capture_default_str();
  }
  cmd->add_option("--budget", c.budget, "Maximum m^n assignments enumerated for OPT")->capture_default_str();
  cmd->add_option("--exact-cap", c.exact_cap, "Largest request set for the exact TSP oracle")->capture_default_str();
  cmd->add_option("--lambda", c.lambda, "Level partition disk parameter in (1/2, 1)")->capture_default_str();
  cmd->add_option("--local-divisor", c.local_divisor, "Local partition radius = min depot distance / divisor")
      ->capture_default_str();
  cmd->add_flag("--no-timing", c.no_timing, "Write runtime_ms as 0 for byte-identical reruns");
  cmd->add_option("--out", c.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static partition schemes for distributed multi-depot routing"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Force kernel ISA (scalar|avx2)")->check(CLI::IsMember({"scalar", "avx2"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  FamilyParams fp;
  std::string family = "random_line";
  std::optional<double> horizon;
  std::string gen_out;
  gen->add_option("--family", family, "line_voronoi|simplex|local_adversarial|random_line|random_bounded_ratio")
      ->capture_default_str();
  gen->add_option("--m", fp.m, "Number of servers")->capture_default_str();
  gen->add_option("--n", fp.n, "Number of requests (random families)")->capture_default_str();
  gen->add_option("--k", fp.k, "line_voronoi horizontal offset")->capture_default_str();
  gen->add_option("--eps", fp.eps, "simplex request scale")->capture_default_str();
  gen->add_option("--f", fp.f, "Depot distance-ratio bound")->capture_default_str();
  gen->add_option("--seed", fp.seed, "Random seed")->capture_default_str();
  gen->add_option("--horizon", horizon, "Attach release dates uniform in [0, horizon]");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // eval / ratio / online / validate
  Common ce, cr, co;
  std::string eval_path, ratio_path, online_path, validate_path;
  auto* eval = app.add_subcommand("eval", "DIS of a scheme on an instance");
  eval->add_option("instance", eval_path, "Instance file")->required();
  add_common(eval, ce, true);
  auto* ratio = app.add_subcommand("ratio", "DIS, exact OPT and their ratio");
  ratio->add_option("instance", ratio_path, "Instance file")->required();
  add_common(ratio, cr, false);
  auto* online = app.add_subcommand("online", "Simulate the distributed online algorithm");
  online->add_option("instance", online_path, "Instance file with release dates")->required();
  add_common(online, co, false);
  auto* val = app.add_subcommand("validate", "Check an instance file");
  val->add_option("instance", validate_path, "Instance file")->required();

  // sweep
  Common cs;
  SweepSpec spec;
  std::string sweep_family = "random_line";
  std::string summary_path;
  std::optional<double> sweep_horizon;
  auto* sweep = app.add_subcommand("sweep", "Ratio statistics over seeded random instances");
  add_common(sweep, cs, false);
  sweep->add_option("--family", sweep_family, "random_line|random_bounded_ratio")->capture_default_str();
  sweep->add_option("--ms", spec.ms, "Server counts")->delimiter(',')->capture_default_str();
  sweep->add_option("--fs", spec.fs, "Ratio bounds (random_bounded_ratio)")->delimiter(',')->capture_default_str();
  sweep->add_option("--n", spec.n, "Requests per instance")->capture_default_str();
  sweep->add_option("--seed", spec.first_seed, "First seed")->capture_default_str();
  sweep->add_option("--seeds", spec.seeds, "Seeds per (m, f) cell")->capture_default_str();
  sweep->add_option("--horizon", sweep_horizon, "Run the online simulation with release dates in [0, horizon]");
  sweep->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--summary", summary_path, "Summary CSV file (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (!isa.empty()) simd::set_active(isa == "avx2" ? simd::Isa::avx2 : simd::Isa::scalar);

    if (*gen) {
      fp.family = family_from_string(family);
      const auto inst = generate(fp);
      Output out(gen_out);
      if (horizon) {
        const auto on = with_release_dates(inst, *horizon, fp.seed);
        validate(on);
        write_instance(out.stream(), on);
      } else {
        validate(inst);
        write_instance(out.stream(), inst);
      }
    } else if (*eval) {
      const auto inst = as_offline(load_instance(eval_path));
      const auto row = eval_instance(inst, stem_of(eval_path), scheme_from_string(ce.scheme), ce.run());
      Output out(ce.out);
      out.stream() << kOfflineCsvHeader << ",per_server\n" << csv_row(row, true) << '\n';
    } else if (*ratio) {
      const auto inst = as_offline(load_instance(ratio_path));
      const auto row = ratio_instance(inst, stem_of(ratio_path), scheme_from_string(cr.scheme), cr.run());
      Output out(cr.out);
      out.stream() << kOfflineCsvHeader << '\n' << csv_row(row) << '\n';
    } else if (*online) {
      const auto any = load_instance(online_path);
      const auto* inst = std::get_if<OnlineInstance>(&any);
      if (!inst) throw ValidationError(online_path + ": online simulation needs release_dates");
      const auto row = online_instance(*inst, stem_of(online_path), scheme_from_string(co.scheme), co.run());
      Output out(co.out);
      out.stream() << kOnlineCsvHeader << '\n' << csv_row(row) << '\n';
    } else if (*val) {
      const auto any = load_instance(validate_path);
      const auto off = as_offline(any);
      std::cout << validate_path << ": ok (" << to_string(off.space().kind()) << ", m=" << off.servers()
                << ", n=" << off.requests.size() << (std::holds_alternative<OnlineInstance>(any) ? ", online" : "")
                << ")\n";
    } else if (*sweep) {
      spec.scheme = scheme_from_string(cs.scheme);
      spec.family = family_from_string(sweep_family);
      spec.horizon = sweep_horizon;
      spec.run = cs.run();
      const auto result = run_sweep(spec);
      Output out(cs.out);
      if (summary_path.empty()) {
        write_sweep(out.stream(), std::cerr, result, spec.horizon.has_value());
      } else {
        Output summary(summary_path);
        write_sweep(out.stream(), summary.stream(), result, spec.horizon.has_value());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "mdroute: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
