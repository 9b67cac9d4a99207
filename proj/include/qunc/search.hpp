#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qunc/bounds.hpp"
#include "qunc/generators.hpp"

namespace qunc {

/// One (rho, A, B, q) problem instance.
struct Instance {
  DensityMatrix rho;
  HermitianMatrix a;
  HermitianMatrix b;
  double q = 1.0;
};

/// refined / (V(A) V(B)); empty when the product is below 1e-14.
std::optional<double> tightness_ratio(const DensityMatrix& rho, const HermitianMatrix& a,
                                      const HermitianMatrix& b, double q);

struct SearchOptions {
  std::size_t workers = 1;  // restarts evaluated concurrently
  double step = 0.5;        // initial simplex edge length
};

struct SearchResult {
  double best_ratio = 0.0;
  std::optional<Instance> best_instance;
  std::size_t evaluations = 0;
  /// (evaluation index, best ratio so far); strictly increasing in ratio.
  std::vector<std::pair<std::size_t, double>> trajectory;
};

/// Number of unconstrained reals describing an n-dimensional instance:
/// n spectrum logits, n^2 frame coordinates, n^2 entries each for A and B.
std::size_t parameter_count(std::size_t n);

/// Maps unconstrained reals to an instance: softmax spectrum (always faithful),
/// eigenframe exp(iH) from a Hermitian H, and Hermitian A, B.
Instance decode_instance(std::size_t n, double q, std::span<const double> params);

/// Hermitian matrix from n^2 reals: n diagonal entries then (re, im) pairs of
/// the strict upper triangle in row-major order.
CMatrix hermitian_from_reals(std::size_t n, std::span<const double> params);

/// Multi-start Nelder-Mead maximisation of the tightness ratio. The budget is
/// split evenly over max(4, budget / 2000) restarts; each restart starts from
/// Gaussian parameters drawn from rng.derive(restart). Every evaluated
/// instance is checked against the variance product and an InequalityViolated
/// error carrying the serialized instance is thrown on failure.
SearchResult maximize_tightness(std::size_t n, double q, std::size_t budget,
                                const SeededRng& rng, const SearchOptions& options = {});

/// One report per q value, in grid order.
std::vector<BoundReport> sweep_q(const DensityMatrix& rho, const HermitianMatrix& a,
                                 const HermitianMatrix& b, std::span<const double> q_grid);

}  // namespace qunc
