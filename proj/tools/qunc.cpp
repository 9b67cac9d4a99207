// qunc: verification, q-sweep and tightness search for q-commutator
// uncertainty bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qunc/cli.hpp"

namespace {

using qunc::cli::OutputFormat;
using qunc::cli::RankPolicy;

// Writes to --out when given, otherwise stdout.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty() && path != "-") file_.emplace(path);
  }
  bool ok() const { return !file_ || static_cast<bool>(*file_); }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

private:
  std::optional<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of eigenvalue-weighted q-commutator uncertainty bounds"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--out", out_path, "Output file (default: standard output)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  qunc::cli::TrialPlan plan;
  std::string rank_policy = "mixed";
  std::string violations_dir = ".";
  auto* verify = app.add_subcommand("verify", "Monte Carlo check of the refined bound");
  verify->add_option("--dims", plan.dims, "Matrix dimensions")->delimiter(',');
  verify->add_option("--trials", plan.trials_per_dim, "Instances per dimension");
  verify->add_option("--seed", plan.seed, "Base seed");
  verify->add_option("--q-lo", plan.q_lo, "Lower end of the uniform q interval");
  verify->add_option("--q-hi", plan.q_hi, "Upper end of the uniform q interval");
  verify->add_option("--rank-policy", rank_policy, "full | mixed")
      ->check(CLI::IsMember({"full", "mixed"}));
  verify->add_option("--tolerance", plan.tolerance_rel, "Relative violation tolerance");
  verify->add_option("--violations-dir", violations_dir, "Directory for violation_<i>.json");

  std::string instance_file;
  double q_lo = 0.0;
  double q_hi = 1.0;
  std::size_t steps = 11;
  auto* sweep = app.add_subcommand("sweep", "Evaluate one instance over a q grid");
  sweep->add_option("instance", instance_file, "Instance JSON file")->required();
  sweep->add_option("--q-lo", q_lo, "First grid point");
  sweep->add_option("--q-hi", q_hi, "Last grid point");
  sweep->add_option("--steps", steps, "Number of grid points");

  std::size_t n = 2;
  double q = 1.0;
  std::size_t budget = 5000;
  std::uint64_t seed = 1;
  std::string instance_out;
  auto* search = app.add_subcommand("search", "Maximise refined bound / variance product");
  search->add_option("--n", n, "Dimension");
  search->add_option("--q", q, "q parameter");
  search->add_option("--budget", budget, "Objective evaluations");
  search->add_option("--seed", seed, "Base seed");
  search->add_option("--instance-out", instance_out, "Also write the best instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qunc::cli::kExitInvalid;
  }

  const OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  OutputTarget target(out_path);
  if (!target.ok()) {
    std::cerr << "cannot open " << out_path << '\n';
    return qunc::cli::kExitInvalid;
  }
  const qunc::cli::RunOptions options{workers, violations_dir};

  if (*verify) {
    plan.rank_policy = rank_policy == "full" ? RankPolicy::Full : RankPolicy::Mixed;
    plan.output_format = fmt;
    return qunc::cli::cmd_verify(plan, target.stream(), std::cerr, options);
  }
  if (*sweep) return qunc::cli::cmd_sweep(instance_file, q_lo, q_hi, steps, fmt, target.stream(), std::cerr);
  return qunc::cli::cmd_search(n, q, budget, seed, target.stream(), std::cerr, options,
                               instance_out.empty() ? std::nullopt : std::optional(instance_out));
}
