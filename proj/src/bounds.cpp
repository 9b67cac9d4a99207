#include "qunc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qunc/error.hpp"

namespace qunc {

namespace {

double sq(double x) { return x * x; }

void require_lemma_domain(double t, double q, const char* name) {
  if (!std::isfinite(t) || !std::isfinite(q))
    throw Error(ErrorCode::DomainError, std::string(name) + ": non-finite argument");
  if (t < 1.0) throw Error(ErrorCode::DomainError, std::string(name) + ": requires t >= 1");
}

// Applies the vanishing-denominator rule shared by the refined and Kimura bounds.
double weighted(const Coefficient& coef, Complex trace) {
  const double magnitude = std::abs(trace);
  if (coef.infinite) {
    if (magnitude < kDegenerateTrace) return 0.0;
    throw Error(ErrorCode::DegenerateCoefficient,
                "coefficient denominator vanishes but |trace| = " + std::to_string(magnitude));
  }
  return coef.value * std::norm(trace);
}

}  // namespace

Coefficient refined_coefficient(double q, double lambda_min, double lambda_max) {
  if (!std::isfinite(q) || !std::isfinite(lambda_min) || !std::isfinite(lambda_max))
    throw Error(ErrorCode::InvalidSpectrum, "non-finite input");
  if (lambda_min < 0.0 || lambda_min > lambda_max || lambda_max <= 0.0)
    throw Error(ErrorCode::InvalidSpectrum, "require 0 <= lambda_min <= lambda_max, lambda_max > 0");

  const double m = std::abs(q);
  double plus = 0.0;
  double minus = 0.0;
  if (m <= 1.0) {
    plus = lambda_max + m * lambda_min;
    minus = lambda_max - m * lambda_min;
  } else {
    plus = m * lambda_max + lambda_min;
    minus = m * lambda_max - lambda_min;
  }
  const double denominator = sq(1.0 + m) * sq(minus);
  if (denominator < kDegenerateDenominator) return {0.0, true};
  // Ratio first: with lambda_min = 0 it is exactly 1 and the coefficient
  // reduces bit-for-bit to 1/(1+|q|)^2.
  const double r = plus / minus;
  return {(r * r) / ((1.0 + m) * (1.0 + m)), false};
}

double robertson_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                       const HermitianMatrix& b) {
  return 0.25 * std::norm(trace_form(rho, q_commutator(a, b, 1.0)));
}

double naive_q_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                     const HermitianMatrix& b, double q) {
  const QParameter param(q);
  const double m = param.magnitude();
  const HermitianMatrix a0 = center(a, rho);
  const HermitianMatrix b0 = center(b, rho);
  return std::norm(q_trace_term(rho, a0, b0, m)) / ((1.0 + m) * (1.0 + m));
}

double refined_q_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                       const HermitianMatrix& b, double q) {
  const QParameter param(q);
  const HermitianMatrix a0 = center(a, rho);
  const HermitianMatrix b0 = center(b, rho);
  const Coefficient coef = refined_coefficient(param.magnitude(), rho.lambda_min(), rho.lambda_max());

  switch (param.regime()) {
    case QRegime::PositiveLeqOne:
      return weighted(coef, trace_form(rho, q_commutator(a0, b0, q)));
    case QRegime::PositiveGtOne:
      return weighted(coef, trace_form(rho, q_commutator(b0, a0, q)));
    case QRegime::Zero:
      return std::norm(trace_form(rho, a0.matrix() * b0.matrix()));
    case QRegime::NegativeGeqMinusOne:
      return weighted(coef, trace_form(rho, q_anticommutator(a0, b0, q)));
    case QRegime::LtMinusOne:
      return weighted(coef, trace_form(rho, q_anticommutator(b0, a0, q)));
  }
  return 0.0;
}

double kimura_bound(const DensityMatrix& rho, const HermitianMatrix& a,
                    const HermitianMatrix& b) {
  const Coefficient coef = refined_coefficient(1.0, rho.lambda_min(), rho.lambda_max());
  return weighted(coef, trace_form(rho, q_commutator(a, b, 1.0)));
}

double lemma_G(double t, double q) {
  require_lemma_domain(t, q, "lemma_G");
  const double m = std::abs(q);
  return sq((t - m) / (t + m));
}

double lemma_F(double t, double q) {
  require_lemma_domain(t, q, "lemma_F");
  const double m = std::abs(q);
  return sq(1.0 + m * t) * sq(t - m) - sq(1.0 - m * t) * sq(t + m);
}

SchwarzTerms schwarz_intermediate(const DensityMatrix& rho, const HermitianMatrix& a0,
                                  const HermitianMatrix& b0, double q) {
  const QParameter param(q);
  if (!param.small()) throw Error(ErrorCode::DomainError, "schwarz_intermediate requires |q| <= 1");
  require_same_dim(a0.dim(), b0.dim(), "schwarz_intermediate");
  const double m = param.magnitude();
  const CMatrix a = eigenbasis_elements(rho, a0);
  const CMatrix b = eigenbasis_elements(rho, b0);
  const RVector& lambda = rho.eigenvalues();

  double sum_a = 0.0;
  double sum_b = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
      const double w = std::abs(lambda(i) - m * lambda(j));
      sum_a += w * std::norm(a(i, j));
      sum_b += w * std::norm(b(j, i));
    }
  }
  return {std::norm(q_trace_term(rho, a0, b0, m)), sum_a * sum_b};
}

bool BoundReport::satisfies(double rel_tol) const noexcept {
  return slack >= -rel_tol * std::max(1.0, product);
}

BoundReport bound_report(const DensityMatrix& rho, const HermitianMatrix& a,
                         const HermitianMatrix& b, double q) {
  require_same_dim(a.dim(), rho.dim(), "bound_report");
  require_same_dim(b.dim(), rho.dim(), "bound_report");
  const QParameter param(q);

  BoundReport r;
  r.dim = rho.dim();
  r.q = q;
  r.regime = param.regime();
  r.var_a = variance(rho, a);
  r.var_b = variance(rho, b);
  r.product = r.var_a * r.var_b;
  r.lambda_min = rho.lambda_min();
  r.lambda_max = rho.lambda_max();
  r.robertson = robertson_bound(rho, a, b);
  r.naive_q = naive_q_bound(rho, a, b, q);
  r.refined = refined_q_bound(rho, a, b, q);
  if (q == 1.0) r.kimura = kimura_bound(rho, a, b);
  r.slack = r.product - r.refined;
  if (r.product >= kZeroProduct) r.ratio = r.refined / r.product;
  return r;
}

}  // namespace qunc
