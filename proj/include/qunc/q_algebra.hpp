#pragma once

#include <string_view>

#include "qunc/hermitian.hpp"

namespace qunc {

/// The five sign/magnitude cases of q. q = +-1 belong to the |q| <= 1 side.
enum class QRegime {
  PositiveLeqOne,       // 0 < q <= 1
  PositiveGtOne,        // q > 1
  Zero,                 // q == 0
  NegativeGeqMinusOne,  // -1 <= q < 0
  LtMinusOne,           // q < -1
};

std::string_view to_string(QRegime regime) noexcept;

class QParameter {
public:
  /// Throws DomainError for non-finite q.
  explicit QParameter(double q);

  double value() const noexcept { return q_; }
  double magnitude() const noexcept;
  QRegime regime() const noexcept { return regime_; }
  bool small() const noexcept;  // |q| <= 1

private:
  double q_;
  QRegime regime_;
};

QRegime classify(double q);

/// [A,B]_q = AB - qBA.
CMatrix q_commutator(const HermitianMatrix& a, const HermitianMatrix& b, double q);

/// {A,B}_q = AB + qBA.
CMatrix q_anticommutator(const HermitianMatrix& a, const HermitianMatrix& b, double q);

/// Tr[rho M].
Complex trace_form(const DensityMatrix& rho, const CMatrix& m);

/// Tr[rho (A0 B0 - q B0 A0)] by direct matrix products.
Complex q_trace_term(const DensityMatrix& rho, const HermitianMatrix& a0,
                     const HermitianMatrix& b0, double q);

}  // namespace qunc
