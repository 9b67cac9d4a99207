#include "qunc/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qunc/error.hpp"

namespace qunc {

namespace {

constexpr double kUnitaryTol = 1e-9;

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

// Clamps eigenvalues in [-tol, 0) to zero and rescales to unit sum.
RVector normalize_spectrum(RVector lambda) {
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!std::isfinite(lambda(i)))
      throw Error(ErrorCode::NonFinite, "non-finite eigenvalue");
    if (lambda(i) < -kNegativeEigenTol)
      throw Error(ErrorCode::NotPositive,
                  "eigenvalue " + std::to_string(lambda(i)) + " is negative");
    if (lambda(i) < 0.0) lambda(i) = 0.0;
  }
  const double sum = lambda.sum();
  if (std::abs(sum - 1.0) > kTraceTol)
    throw Error(ErrorCode::TraceNotOne, "trace is " + std::to_string(sum));
  if (sum != 1.0) lambda /= sum;
  return lambda;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": " + std::to_string(a) +
                                                  " vs " + std::to_string(b));
}

ComplexGrid HermitianMatrix::to_grid() const {
  ComplexGrid grid(dim(), std::vector<Complex>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) grid[i][j] = (*this)(i, j);
  return grid;
}

HermitianMatrix make_hermitian(const CMatrix& entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols())
    throw Error(ErrorCode::InvalidDimension, "matrix must be square with n >= 1");
  if (!all_finite(entries)) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");

  const double scale = entries.cwiseAbs().maxCoeff();
  const double deviation = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > kHermiticityTol * scale)
    throw Error(ErrorCode::NotHermitian,
                "max |M - M^H| = " + std::to_string(deviation));
  return HermitianMatrix(hermitian_part(entries));
}

HermitianMatrix make_hermitian(const ComplexGrid& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::InvalidDimension, "grid is not square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return make_hermitian(m);
}

DensityMatrix make_density(const CMatrix& entries) {
  HermitianMatrix h = make_hermitian(entries);
  const double trace = h.matrix().trace().real();
  if (std::abs(trace - 1.0) > kTraceTol)
    throw Error(ErrorCode::TraceNotOne, "trace is " + std::to_string(trace));

  // SelfAdjointEigenSolver returns eigenvalues in ascending order.
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::InvalidSpectrum, "eigendecomposition failed");
  const RVector& raw = solver.eigenvalues();
  RVector lambda = normalize_spectrum(raw);
  CMatrix vectors = solver.eigenvectors();

  if (lambda != raw) {
    // Keep rho and its cached spectrum describing the same operator.
    CMatrix rebuilt = vectors * lambda.cast<Complex>().asDiagonal() * vectors.adjoint();
    return DensityMatrix(make_hermitian(hermitian_part(rebuilt)), std::move(lambda),
                         std::move(vectors));
  }
  return DensityMatrix(std::move(h), std::move(lambda), std::move(vectors));
}

DensityMatrix make_density(const ComplexGrid& entries) {
  return make_density(make_hermitian(entries).matrix());
}

DensityMatrix DensityMatrix::from_spectrum(const RVector& eigenvalues, const CMatrix& unitary) {
  const Eigen::Index n = eigenvalues.size();
  if (n < 1 || unitary.rows() != n || unitary.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "spectrum and frame sizes differ");
  if (!all_finite(unitary)) throw Error(ErrorCode::NonFinite, "frame has NaN or Inf entries");
  const double unitarity =
      (unitary.adjoint() * unitary - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitarity > kUnitaryTol)
    throw Error(ErrorCode::InvalidSpectrum, "frame is not unitary");

  RVector lambda = normalize_spectrum(eigenvalues);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return lambda(a) < lambda(b); });

  RVector sorted(n);
  CMatrix vectors(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sorted(k) = lambda(order[static_cast<std::size_t>(k)]);
    vectors.col(k) = unitary.col(order[static_cast<std::size_t>(k)]);
  }
  CMatrix rho = vectors * sorted.cast<Complex>().asDiagonal() * vectors.adjoint();
  return DensityMatrix(make_hermitian(hermitian_part(rho)), std::move(sorted), std::move(vectors));
}

HermitianMatrix center(const HermitianMatrix& a, const DensityMatrix& rho) {
  require_same_dim(a.dim(), rho.dim(), "center");
  const double mean = expectation(rho, a);
  CMatrix shifted = a.matrix();
  shifted.diagonal().array() -= mean;
  return make_hermitian(shifted);
}

double expectation(const DensityMatrix& rho, const HermitianMatrix& a) {
  require_same_dim(a.dim(), rho.dim(), "expectation");
  // Tr[rho A] = sum_ij rho_ij A_ji, without forming the product.
  return (rho.matrix().array() * a.matrix().transpose().array()).sum().real();
}

double variance(const DensityMatrix& rho, const HermitianMatrix& a) {
  const HermitianMatrix a0 = center(a, rho);
  const CMatrix sq = a0.matrix() * a0.matrix();
  const double v = (rho.matrix().array() * sq.transpose().array()).sum().real();
  return v < 0.0 ? 0.0 : v;
}

CMatrix eigenbasis_elements(const DensityMatrix& rho, const HermitianMatrix& x) {
  require_same_dim(x.dim(), rho.dim(), "eigenbasis_elements");
  return rho.eigenvectors().adjoint() * x.matrix() * rho.eigenvectors();
}

}  // namespace qunc
