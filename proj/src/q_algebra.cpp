#include "qunc/q_algebra.hpp"

#include <cmath>

#include "qunc/error.hpp"

namespace qunc {

std::string_view to_string(QRegime regime) noexcept {
  switch (regime) {
    case QRegime::PositiveLeqOne: return "positive_leq_one";
    case QRegime::PositiveGtOne: return "positive_gt_one";
    case QRegime::Zero: return "zero";
    case QRegime::NegativeGeqMinusOne: return "negative_geq_minus_one";
    case QRegime::LtMinusOne: return "lt_minus_one";
  }
  return "unknown";
}

QRegime classify(double q) {
  if (!std::isfinite(q)) throw Error(ErrorCode::DomainError, "q must be finite");
  if (q == 0.0) return QRegime::Zero;
  if (q > 0.0) return q <= 1.0 ? QRegime::PositiveLeqOne : QRegime::PositiveGtOne;
  return q >= -1.0 ? QRegime::NegativeGeqMinusOne : QRegime::LtMinusOne;
}

QParameter::QParameter(double q) : q_(q), regime_(classify(q)) {}

double QParameter::magnitude() const noexcept { return std::abs(q_); }

bool QParameter::small() const noexcept { return std::abs(q_) <= 1.0; }

CMatrix q_commutator(const HermitianMatrix& a, const HermitianMatrix& b, double q) {
  require_same_dim(a.dim(), b.dim(), "q_commutator");
  return a.matrix() * b.matrix() - q * (b.matrix() * a.matrix());
}

CMatrix q_anticommutator(const HermitianMatrix& a, const HermitianMatrix& b, double q) {
  return q_commutator(a, b, -q);
}

Complex trace_form(const DensityMatrix& rho, const CMatrix& m) {
  require_same_dim(static_cast<std::size_t>(m.rows()), rho.dim(), "trace_form");
  require_same_dim(static_cast<std::size_t>(m.cols()), rho.dim(), "trace_form");
  return (rho.matrix().array() * m.transpose().array()).sum();
}

Complex q_trace_term(const DensityMatrix& rho, const HermitianMatrix& a0,
                     const HermitianMatrix& b0, double q) {
  return trace_form(rho, q_commutator(a0, b0, q));
}

}  // namespace qunc
