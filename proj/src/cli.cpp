#include "qunc/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "qunc/error.hpp"
#include "qunc/generators.hpp"
#include "qunc/io.hpp"
#include "qunc/search.hpp"

namespace qunc::cli {

namespace {

constexpr std::array<double, 3> kBoundaryQ{-1.0, 0.0, 1.0};
constexpr std::size_t kChunk = 4096;

struct TrialRecord {
  std::string line;
  bool violation = false;
  std::optional<io::json> replay;
};

Instance draw_trial(const TrialPlan& plan, std::size_t global_index) {
  const std::size_t n = plan.dims[global_index / plan.trials_per_dim];
  const std::size_t t = global_index % plan.trials_per_dim;
  SeededRng rng = SeededRng(plan.seed).derive(global_index);

  std::size_t rank = n;
  if (plan.rank_policy == RankPolicy::Mixed && n > 1 && t % 2 == 1)
    rank = 1 + std::min(n - 2, static_cast<std::size_t>(rng.uniform() * static_cast<double>(n - 1)));

  const double q = t % 5 == 0 ? kBoundaryQ[(t / 5) % kBoundaryQ.size()]
                              : rng.uniform(plan.q_lo, plan.q_hi);

  DensityMatrix rho = random_density(n, rank, rng);
  HermitianMatrix a = random_hermitian(n, rng);
  HermitianMatrix b = random_hermitian(n, rng);
  return Instance{std::move(rho), std::move(a), std::move(b), q};
}

TrialRecord run_trial(const TrialPlan& plan, std::size_t index) {
  const Instance inst = draw_trial(plan, index);
  const BoundReport report = bound_report(inst.rho, inst.a, inst.b, inst.q);
  TrialRecord rec;
  rec.violation = !report.satisfies(plan.tolerance_rel);
  if (rec.violation)
    rec.replay = io::json{{"trial", index},
                          {"instance", io::instance_to_json(inst)},
                          {"report", io::report_to_json(report)}};
  if (plan.output_format == OutputFormat::Csv) {
    rec.line = io::csv_row(report);
  } else {
    io::json j = io::report_to_json(report);
    j["trial"] = index;
    j["violation"] = rec.violation;
    if (rec.violation) j["instance"] = (*rec.replay)["instance"];
    rec.line = j.dump();
  }
  return rec;
}

void write_reports(const std::vector<BoundReport>& reports, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << io::csv_header() << '\n';
    for (const auto& r : reports) out << io::csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) out << io::report_to_json(r).dump() << '\n';
  }
}

}  // namespace

void TrialPlan::validate() const {
  if (dims.empty()) throw Error(ErrorCode::InvalidPlan, "dims must not be empty");
  for (std::size_t n : dims)
    if (n < 1) throw Error(ErrorCode::InvalidPlan, "every dimension must be >= 1");
  if (trials_per_dim < 1) throw Error(ErrorCode::InvalidPlan, "trials must be >= 1");
  if (!std::isfinite(q_lo) || !std::isfinite(q_hi) || q_lo > q_hi)
    throw Error(ErrorCode::InvalidPlan, "require finite q_lo <= q_hi");
  if (!(tolerance_rel > 0.0) || !std::isfinite(tolerance_rel))
    throw Error(ErrorCode::InvalidPlan, "tolerance must be positive");
}

int cmd_verify(const TrialPlan& plan, std::ostream& out, std::ostream& err,
               const RunOptions& options) {
  try {
    plan.validate();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }

  const std::size_t total = plan.dims.size() * plan.trials_per_dim;
  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  std::size_t violations = 0;

  if (plan.output_format == OutputFormat::Csv) out << io::csv_header() << '\n';

  std::vector<TrialRecord> records;
  for (std::size_t begin = 0; begin < total; begin += kChunk) {
    const std::size_t end = std::min(total, begin + kChunk);
    records.assign(end - begin, TrialRecord{});
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](std::size_t w) {
      try {
        for (std::size_t i = begin + w; i < end; i += workers) records[i - begin] = run_trial(plan, i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& f : failures) {
      if (!f) continue;
      try {
        std::rethrow_exception(f);
      } catch (const std::exception& e) {
        err << "verify: " << e.what() << '\n';
        return kExitViolation;
      }
    }

    for (std::size_t i = begin; i < end; ++i) {
      const TrialRecord& rec = records[i - begin];
      out << rec.line << '\n';
      if (!rec.violation) continue;
      ++violations;
      const auto path = std::filesystem::path(options.violations_dir) /
                        ("violation_" + std::to_string(i) + ".json");
      std::ofstream file(path);
      file << rec.replay->dump(2) << '\n';
      if (!file) err << "verify: could not write " << path.string() << '\n';
    }
  }

  err << "verify: " << total << " instances, " << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_sweep(const std::string& instance_file, double q_lo, double q_hi, std::size_t steps,
              OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    if (steps < 1) throw Error(ErrorCode::InvalidPlan, "steps must be >= 1");
    if (!std::isfinite(q_lo) || !std::isfinite(q_hi))
      throw Error(ErrorCode::InvalidPlan, "q range must be finite");
    const Instance inst = io::read_instance_file(instance_file);
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i)
      grid[i] = steps == 1 ? q_lo
                           : q_lo + (q_hi - q_lo) * static_cast<double>(i) /
                                        static_cast<double>(steps - 1);
    grid.back() = steps == 1 ? q_lo : q_hi;
    write_reports(sweep_q(inst.rho, inst.a, inst.b, grid), format, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int cmd_search(std::size_t n, double q, std::size_t budget, std::uint64_t seed, std::ostream& out,
               std::ostream& err, const RunOptions& options,
               const std::optional<std::string>& instance_out) {
  SearchResult result;
  try {
    result = maximize_tightness(n, q, budget, SeededRng(seed),
                                SearchOptions{.workers = options.workers});
  } catch (const Error& e) {
    err << "search: " << e.what() << '\n';
    return e.code() == ErrorCode::InequalityViolated ? kExitViolation : kExitInvalid;
  }

  io::json trajectory = io::json::array();
  for (const auto& [index, ratio] : result.trajectory) trajectory.push_back({index, ratio});
  io::json doc = {{"n", n},
                  {"q", q},
                  {"budget", budget},
                  {"seed", seed},
                  {"best_ratio", result.best_ratio},
                  {"evaluations", result.evaluations},
                  {"trajectory", std::move(trajectory)}};
  if (result.best_instance) {
    doc["instance"] = io::instance_to_json(*result.best_instance);
    if (instance_out) {
      std::ofstream file(*instance_out);
      file << doc["instance"].dump(2) << '\n';
      if (!file) {
        err << "search: could not write " << *instance_out << '\n';
        return kExitInvalid;
      }
    }
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace qunc::cli
