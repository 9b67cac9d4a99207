#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qunc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Row-major grid form used at API boundaries (JSON, Python lists).
using ComplexGrid = std::vector<std::vector<Complex>>;

inline constexpr double kHermiticityTol = 1e-10;  // relative to max |entry|
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-10;

/// Self-adjoint n x n complex matrix. Immutable once constructed; the only
/// way to obtain one is through make_hermitian (or the generators), so every
/// instance has passed validation.
class HermitianMatrix {
public:
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  ComplexGrid to_grid() const;

  friend HermitianMatrix make_hermitian(const CMatrix& entries);

private:
  explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Validates a square finite grid and returns its Hermitian part (M + M^H)/2.
/// Throws NotHermitian when max |M - M^H| exceeds 1e-10 * max |M_ij|.
HermitianMatrix make_hermitian(const CMatrix& entries);
HermitianMatrix make_hermitian(const ComplexGrid& entries);

/// Density operator with its spectral decomposition cached. Eigenvalues are
/// ascending, non-negative and sum to one; column k of eigenvectors() is the
/// eigenvector for eigenvalues()[k].
class DensityMatrix {
public:
  std::size_t dim() const noexcept { return base_.dim(); }
  const HermitianMatrix& base() const noexcept { return base_; }
  const CMatrix& matrix() const noexcept { return base_.matrix(); }
  const RVector& eigenvalues() const noexcept { return eigenvalues_; }
  const CMatrix& eigenvectors() const noexcept { return eigenvectors_; }
  double lambda_min() const noexcept { return eigenvalues_(0); }
  double lambda_max() const noexcept { return eigenvalues_(eigenvalues_.size() - 1); }

  /// Builds rho = U diag(lambda) U^H from a spectrum and a unitary frame. The
  /// spectrum is clamped and normalized exactly like make_density, then sorted
  /// ascending with the columns of U permuted to match.
  static DensityMatrix from_spectrum(const RVector& eigenvalues, const CMatrix& unitary);

  friend DensityMatrix make_density(const CMatrix& entries);

private:
  DensityMatrix(HermitianMatrix base, RVector eigenvalues, CMatrix eigenvectors)
      : base_(std::move(base)),
        eigenvalues_(std::move(eigenvalues)),
        eigenvectors_(std::move(eigenvectors)) {}

  HermitianMatrix base_;
  RVector eigenvalues_;
  CMatrix eigenvectors_;
};

DensityMatrix make_density(const CMatrix& entries);
DensityMatrix make_density(const ComplexGrid& entries);

/// A - Tr[rho A] I.
HermitianMatrix center(const HermitianMatrix& a, const DensityMatrix& rho);

/// Tr[rho A] (real for Hermitian A).
double expectation(const DensityMatrix& rho, const HermitianMatrix& a);

/// V_rho(A) = Tr[rho A0^2], clamped at zero.
double variance(const DensityMatrix& rho, const HermitianMatrix& a);

/// Matrix elements <phi_i|X|phi_j> in the eigenbasis of rho.
CMatrix eigenbasis_elements(const DensityMatrix& rho, const HermitianMatrix& x);

void require_same_dim(std::size_t a, std::size_t b, const char* where);

}  // namespace qunc
