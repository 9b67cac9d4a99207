#include "qunc/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "qunc/error.hpp"
#include "qunc/io.hpp"

namespace qunc {

namespace {

using Point = std::vector<double>;

constexpr double kDiameterTol = 1e-8;

struct RestartOutcome {
  double best = -1.0;
  Point best_point;
  std::size_t evaluations = 0;
  std::vector<std::pair<std::size_t, double>> trajectory;  // local indices
};

// Minimises -ratio. Instances without a defined ratio, or whose coefficient
// is numerically degenerate, score 0 so the simplex moves away from them.
class Objective {
public:
  Objective(std::size_t n, double q) : n_(n), q_(q) {}

  double operator()(const Point& x) const {
    Instance inst = decode_instance(n_, q_, x);
    BoundReport report;
    try {
      report = bound_report(inst.rho, inst.a, inst.b, q_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateCoefficient) return 0.0;
      throw;
    }
    if (!report.satisfies()) {
      throw Error(ErrorCode::InequalityViolated,
                  "refined bound exceeds variance product; instance = " +
                      io::instance_to_json(inst).dump());
    }
    return report.ratio ? -*report.ratio : 0.0;
  }

private:
  std::size_t n_;
  double q_;
};

double simplex_diameter(const std::vector<Point>& simplex) {
  double diameter = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < simplex[0].size(); ++k) {
      const double d = simplex[i][k] - simplex[0][k];
      d2 += d * d;
    }
    diameter = std::max(diameter, std::sqrt(d2));
  }
  return diameter;
}

// Nelder-Mead with dimension-adaptive coefficients (Gao & Han), which behaves
// better than the classic 1/2/0.5/0.5 choice in the 14+ dimensional spaces
// used here.
RestartOutcome nelder_mead(const Objective& f, Point start, double step, std::size_t budget) {
  RestartOutcome out;
  if (budget == 0) return out;

  const std::size_t dim = start.size();
  const double nd = static_cast<double>(dim);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / nd;
  const double gamma = 0.75 - 1.0 / (2.0 * nd);
  const double delta = 1.0 - 1.0 / nd;

  auto eval = [&](const Point& x) {
    const double v = f(x);
    ++out.evaluations;
    if (-v > out.best) {
      out.best = -v;
      out.best_point = x;
      out.trajectory.emplace_back(out.evaluations, out.best);
    }
    return v;
  };
  auto exhausted = [&] { return out.evaluations >= budget; };

  std::vector<Point> simplex{start};
  std::vector<double> values{eval(start)};
  for (std::size_t k = 0; k < dim && !exhausted(); ++k) {
    Point v = start;
    v[k] += step;
    values.push_back(eval(v));
    simplex.push_back(std::move(v));
  }
  if (simplex.size() < dim + 1) return out;

  std::vector<std::size_t> order(dim + 1);
  while (!exhausted()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> s;
      std::vector<double> v;
      for (std::size_t i : order) {
        s.push_back(std::move(simplex[i]));
        v.push_back(values[i]);
      }
      simplex = std::move(s);
      values = std::move(v);
    }
    if (simplex_diameter(simplex) < kDiameterTol) break;

    Point centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k] / nd;

    auto along = [&](double t) {
      Point p(dim);
      for (std::size_t k = 0; k < dim; ++k) p[k] = centroid[k] + t * (simplex[dim][k] - centroid[k]);
      return p;
    };

    Point xr = along(-alpha);
    const double fr = eval(xr);
    if (fr < values[0]) {
      if (exhausted()) break;
      Point xe = along(-alpha * beta);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[dim] = std::move(xe);
        values[dim] = fe;
      } else {
        simplex[dim] = std::move(xr);
        values[dim] = fr;
      }
      continue;
    }
    if (fr < values[dim - 1]) {
      simplex[dim] = std::move(xr);
      values[dim] = fr;
      continue;
    }
    if (exhausted()) break;
    const bool outside = fr < values[dim];
    Point xc = along(outside ? -alpha * gamma : gamma);
    const double fc = eval(xc);
    if (fc < (outside ? fr : values[dim])) {
      simplex[dim] = std::move(xc);
      values[dim] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= dim && !exhausted(); ++i) {
      for (std::size_t k = 0; k < dim; ++k)
        simplex[i][k] = simplex[0][k] + delta * (simplex[i][k] - simplex[0][k]);
      values[i] = eval(simplex[i]);
    }
  }
  return out;
}

void require_finite(double q) {
  if (!std::isfinite(q)) throw Error(ErrorCode::DomainError, "q must be finite");
}

}  // namespace

std::optional<double> tightness_ratio(const DensityMatrix& rho, const HermitianMatrix& a,
                                      const HermitianMatrix& b, double q) {
  return bound_report(rho, a, b, q).ratio;
}

std::size_t parameter_count(std::size_t n) { return n + 3 * n * n; }

CMatrix hermitian_from_reals(std::size_t n, std::span<const double> params) {
  if (params.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "hermitian_from_reals expects n^2 values");
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix h = CMatrix::Zero(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) h(i, i) = params[k++];
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const Complex z(params[k], params[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

Instance decode_instance(std::size_t n, double q, std::span<const double> params) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 1");
  if (params.size() != parameter_count(n))
    throw Error(ErrorCode::DimensionMismatch, "wrong parameter count");
  const std::size_t nn = n * n;
  const auto logits = params.subspan(0, n);
  const auto frame = params.subspan(n, nn);
  const auto a = params.subspan(n + nn, nn);
  const auto b = params.subspan(n + 2 * nn, nn);

  const double peak = *std::max_element(logits.begin(), logits.end());
  RVector lambda(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) lambda(static_cast<Eigen::Index>(i)) = std::exp(logits[i] - peak);
  lambda /= lambda.sum();

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_from_reals(n, frame));
  const RVector& d = solver.eigenvalues();
  Eigen::VectorXcd phases(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) phases(i) = std::polar(1.0, d(i));
  const CMatrix& v = solver.eigenvectors();
  const CMatrix unitary = v * phases.asDiagonal() * v.adjoint();

  return Instance{DensityMatrix::from_spectrum(lambda, unitary),
                  make_hermitian(hermitian_from_reals(n, a)),
                  make_hermitian(hermitian_from_reals(n, b)), q};
}

SearchResult maximize_tightness(std::size_t n, double q, std::size_t budget,
                                const SeededRng& rng, const SearchOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidDimension, "search requires n >= 2");
  if (budget < 1) throw Error(ErrorCode::BudgetZero, "budget must be >= 1");
  require_finite(q);

  const std::size_t restarts = std::max<std::size_t>(4, budget / 2000);
  std::vector<std::size_t> shares(restarts, budget / restarts);
  for (std::size_t r = 0; r < budget % restarts; ++r) ++shares[r];

  const Objective objective(n, q);
  const std::size_t dim = parameter_count(n);
  std::vector<RestartOutcome> outcomes(restarts);
  std::vector<std::exception_ptr> failures(restarts);

  auto run = [&](std::size_t r) {
    try {
      SeededRng local = rng.derive(r);
      Point start(dim);
      for (double& x : start) x = local.normal();
      outcomes[r] = nelder_mead(objective, std::move(start), options.step, shares[r]);
    } catch (...) {
      failures[r] = std::current_exception();
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, restarts);
  if (workers == 1) {
    for (std::size_t r = 0; r < restarts; ++r) run(r);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < restarts; r += workers) run(r);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  // Merge in restart order so the result is independent of scheduling.
  SearchResult result;
  std::size_t offset = 0;
  double running = -1.0;
  double best = -1.0;
  const Point* best_point = nullptr;
  for (const RestartOutcome& o : outcomes) {
    for (const auto& [index, ratio] : o.trajectory) {
      if (ratio > running) {
        running = ratio;
        result.trajectory.emplace_back(offset + index, ratio);
      }
    }
    if (!o.best_point.empty() && o.best > best) {
      best = o.best;
      best_point = &o.best_point;
    }
    offset += o.evaluations;
  }
  result.evaluations = offset;
  result.best_ratio = std::max(best, 0.0);
  if (best_point) result.best_instance = decode_instance(n, q, *best_point);
  return result;
}

std::vector<BoundReport> sweep_q(const DensityMatrix& rho, const HermitianMatrix& a,
                                 const HermitianMatrix& b, std::span<const double> q_grid) {
  if (q_grid.empty()) throw Error(ErrorCode::EmptyGrid, "q grid is empty");
  for (double q : q_grid) require_finite(q);
  std::vector<BoundReport> reports;
  reports.reserve(q_grid.size());
  for (double q : q_grid) reports.push_back(bound_report(rho, a, b, q));
  return reports;
}

}  // namespace qunc
