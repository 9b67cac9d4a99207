#pragma once

#include <cstddef>
#include <optional>

#include "qunc/hermitian.hpp"
#include "qunc/q_algebra.hpp"

namespace qunc {

inline constexpr double kDegenerateDenominator = 1e-14;
inline constexpr double kDegenerateTrace = 1e-12;
inline constexpr double kZeroProduct = 1e-14;
inline constexpr double kInequalityRelTol = 1e-9;

/// Eigenvalue-dependent factor in front of the squared q-commutator trace.
/// `infinite` is set when (1+|q|)^2 (lambda_max - |q| lambda_min)^2 (or its
/// |q| > 1 analogue) falls below 1e-14; `value` is then meaningless.
struct Coefficient {
  double value = 0.0;
  bool infinite = false;
};

/// |q| <= 1:  (l_n + |q| l_1)^2 / ((1+|q|)^2 (l_n - |q| l_1)^2)
/// |q| >  1:  (|q| l_n + l_1)^2 / ((1+|q|)^2 (|q| l_n - l_1)^2)
Coefficient refined_coefficient(double q, double lambda_min, double lambda_max);

/// 1/4 |Tr[rho [A,B]]|^2
double robertson_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                       const HermitianMatrix& b);

/// |Tr[rho [A0,B0]_|q|]|^2 / (1+|q|)^2
double naive_q_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                     const HermitianMatrix& b, double q);

/// Eigenvalue-weighted bound, dispatched on the regime of q:
///   0 < q <= 1   coef(q)   |Tr[rho [A0,B0]_q]|^2
///   q > 1        coef(q)   |Tr[rho [B0,A0]_q]|^2
///   q = 0                  |Tr[rho A0 B0]|^2
///   -1 <= q < 0  coef(|q|) |Tr[rho {A0,B0}_q]|^2
///   q < -1       coef(|q|) |Tr[rho {B0,A0}_q]|^2
/// A vanishing coefficient denominator paired with a vanishing trace yields 0;
/// with a non-vanishing trace it throws DegenerateCoefficient.
double refined_q_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                       const HermitianMatrix& b, double q);

/// q = 1 specialisation using the uncentred commutator.
double kimura_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                    const HermitianMatrix& b);

/// ((t - |q|)/(t + |q|))^2, non-decreasing on t >= 1 when |q| <= 1.
double lemma_G(double t, double q);

/// (1+|q|t)^2 (t-|q|)^2 - (1-|q|t)^2 (t+|q|)^2, non-negative on t >= 1 when |q| <= 1.
double lemma_F(double t, double q);

struct SchwarzTerms {
  double lhs = 0.0;  // |Tr[rho [A0,B0]_|q|]|^2
  double rhs = 0.0;  // (sum |l_i - |q| l_j| |a_ij|^2)(sum |l_i - |q| l_j| |b_ji|^2)
};

/// Both sides of the Cauchy-Schwarz step for |q| <= 1. Expects centred inputs.
SchwarzTerms schwarz_intermediate(const DensityMatrix& rho, const HermitianMatrix& a0,
                                  const HermitianMatrix& b0, double q);

struct BoundReport {
  std::size_t dim = 0;
  double q = 0.0;
  QRegime regime = QRegime::Zero;
  double var_a = 0.0;
  double var_b = 0.0;
  double product = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double robertson = 0.0;
  double naive_q = 0.0;
  double refined = 0.0;
  std::optional<double> kimura;  // only at q == 1
  double slack = 0.0;            // product - refined
  std::optional<double> ratio;   // refined / product, absent when product < 1e-14

  /// slack >= -rel_tol * max(1, product)
  bool satisfies(double rel_tol = kInequalityRelTol) const noexcept;
};

BoundReport bound_report(const DensityMatrix& rho, const HermitianMatrix& a,
                         const HermitianMatrix& b, double q);

}  // namespace qunc
