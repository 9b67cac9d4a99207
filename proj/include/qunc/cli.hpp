#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qunc::cli {

enum class RankPolicy { Full, Mixed };
enum class OutputFormat { Csv, Json };

/// Exit statuses shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

/// Seeded Monte Carlo verification run. Trial t of each dimension uses
/// q from {-1, 0, 1} (cycling) when t % 5 == 0 and q ~ U[q_lo, q_hi]
/// otherwise; under the mixed policy odd trials get a rank-deficient state.
struct TrialPlan {
  std::vector<std::size_t> dims{2};
  std::size_t trials_per_dim = 100;
  double q_lo = -3.0;
  double q_hi = 3.0;
  RankPolicy rank_policy = RankPolicy::Mixed;
  std::uint64_t seed = 0;
  double tolerance_rel = 1e-9;
  OutputFormat output_format = OutputFormat::Csv;

  /// Throws Error(InvalidPlan) when an invariant is broken.
  void validate() const;
};

struct RunOptions {
  std::size_t workers = 1;
  std::string violations_dir = ".";
};

/// Runs every trial, writes one record per instance to `out` in trial order
/// and a violation_<index>.json replay file per failing instance.
/// Returns 0 (no violations), 1 (violations) or 2 (invalid plan).
int cmd_verify(const TrialPlan& plan, std::ostream& out, std::ostream& err,
               const RunOptions& options = {});

/// Evaluates the instance file on `steps` evenly spaced q values in
/// [q_lo, q_hi] (endpoints included; steps == 1 gives q_lo alone).
int cmd_sweep(const std::string& instance_file, double q_lo, double q_hi, std::size_t steps,
              OutputFormat format, std::ostream& out, std::ostream& err);

/// Runs the tightness search and prints a JSON summary whose "instance"
/// member is a valid instance file. When instance_out is set the instance is
/// also written there on its own.
int cmd_search(std::size_t n, double q, std::size_t budget, std::uint64_t seed, std::ostream& out,
               std::ostream& err, const RunOptions& options = {},
               const std::optional<std::string>& instance_out = std::nullopt);

}  // namespace qunc::cli
