#include <doctest.h>

#include "oracles.hpp"
#include "qunc/error.hpp"
#include "qunc/generators.hpp"
#include "qunc/hermitian.hpp"

using namespace qunc;
using oracle::diag2;
using oracle::pauli_x;
using oracle::pauli_y;
using oracle::pauli_z;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qunc::Error");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("make_hermitian accepts Pauli matrices") {
  CHECK(make_hermitian(pauli_z()).matrix() == pauli_z());
  CHECK(make_hermitian(pauli_y()).matrix() == pauli_y());
  ComplexGrid grid{{1.0, Complex(2, 1)}, {Complex(2, -1), -3.0}};
  CHECK(make_hermitian(grid).to_grid() == grid);
}

TEST_CASE("make_hermitian rejects bad input") {
  CMatrix upper(2, 2);
  upper << 0, 1, 0, 0;
  CHECK(code_of([&] { make_hermitian(upper); }) == ErrorCode::NotHermitian);

  CMatrix nan = pauli_x();
  nan(0, 0) = std::nan("");
  CHECK(code_of([&] { make_hermitian(nan); }) == ErrorCode::NonFinite);

  CHECK(code_of([] { make_hermitian(CMatrix(2, 3)); }) == ErrorCode::InvalidDimension);
  CHECK(code_of([] { make_hermitian(ComplexGrid{{1.0, 0.0}, {0.0}}); }) ==
        ErrorCode::InvalidDimension);
}

TEST_CASE("make_hermitian symmetrizes deviations below tolerance") {
  CMatrix m = pauli_x();
  m(0, 1) += 1e-12;
  const HermitianMatrix h = make_hermitian(m);
  CHECK(h(0, 1) == h(1, 0));
  CHECK(std::abs(h(0, 1) - 1.0) < 1e-12);
}

TEST_CASE("make_density sorts ascending and validates") {
  const DensityMatrix asc = make_density(diag2(0.25, 0.75));
  CHECK(asc.eigenvalues()(0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(asc.eigenvalues()(1) == doctest::Approx(0.75).epsilon(1e-15));

  const DensityMatrix desc = make_density(diag2(0.75, 0.25));
  CHECK(desc.lambda_min() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(desc.lambda_max() == doctest::Approx(0.75).epsilon(1e-15));
  // Eigenvector for 0.25 is e_2 (up to phase).
  CHECK(std::abs(desc.eigenvectors()(1, 0)) == doctest::Approx(1.0));

  CHECK(code_of([] { make_density(diag2(0.6, 0.6)); }) == ErrorCode::TraceNotOne);
  CHECK(code_of([] { make_density(diag2(1.5, -0.5)); }) == ErrorCode::NotPositive);
}

TEST_CASE("make_density clamps tiny negative eigenvalues") {
  const DensityMatrix rho = make_density(diag2(-5e-11, 1.0 + 5e-11));
  CHECK(rho.lambda_min() == 0.0);
  CHECK(rho.eigenvalues().sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.0));
}

TEST_CASE("center") {
  const DensityMatrix mixed = make_density(diag2(0.3, 0.7));
  CHECK((center(make_hermitian(pauli_x()), mixed).matrix() - pauli_x()).norm() < 1e-15);

  const DensityMatrix pure = make_density(diag2(1.0, 0.0));
  CHECK((center(make_hermitian(pauli_z()), pure).matrix() - diag2(0.0, -2.0)).norm() < 1e-15);

  CHECK(center(make_hermitian(CMatrix::Identity(2, 2)), mixed).matrix().norm() < 1e-15);

  const HermitianMatrix small = make_hermitian(CMatrix::Identity(3, 3));
  CHECK(code_of([&] { center(small, mixed); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("variance closed forms") {
  const HermitianMatrix sz = make_hermitian(pauli_z());
  const HermitianMatrix sx = make_hermitian(pauli_x());
  CHECK(variance(maximally_mixed(2), sz) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(variance(make_density(diag2(1.0, 0.0)), sz) == 0.0);
  CHECK(variance(make_density(diag2(0.75, 0.25)), sx) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigenbasis_elements") {
  const DensityMatrix rho = make_density(diag2(0.25, 0.75));
  const CMatrix x = eigenbasis_elements(rho, make_hermitian(pauli_z()));
  CHECK(std::abs(x(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(x(1, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(x(0, 1)) < 1e-15);
  CHECK(eigenbasis_elements(rho, make_hermitian(CMatrix::Zero(2, 2))).norm() == 0.0);

  // Standard-basis eigenvectors (maximally mixed is built on the identity frame).
  SeededRng rng(5);
  const HermitianMatrix h = random_hermitian(3, rng);
  CHECK((eigenbasis_elements(maximally_mixed(3), h) - h.matrix()).norm() < 1e-15);
}

TEST_CASE("property: variance, round trip, idempotent centering") {
  SeededRng root(2024);
  for (std::size_t trial = 0; trial < 500; ++trial) {
    SeededRng rng = root.derive(trial);
    const std::size_t n = 1 + trial % 8;
    const std::size_t rank = 1 + trial % n;
    const DensityMatrix rho = random_density(n, rank, rng);
    const HermitianMatrix h = random_hermitian(n, rng);

    const double v = variance(rho, h);
    CHECK(v >= 0.0);
    CHECK(std::abs(v - oracle::raw_variance(rho, h.matrix())) < 1e-10);

    // sum_ij lambda_i |x_ij|^2 equals the variance for centred X.
    const HermitianMatrix h0 = center(h, rho);
    const CMatrix x = oracle::loop_elements(rho, h0.matrix());
    double weighted = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) weighted += rho.eigenvalues()(i) * std::norm(x(i, j));
    CHECK(std::abs(weighted - v) < 1e-9);

    CHECK((center(h0, rho).matrix() - h0.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(oracle::loop_mean(rho, h0.matrix())) < 1e-12);

    const DensityMatrix again = make_density(rho.matrix());
    const CMatrix& u = again.eigenvectors();
    CHECK((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-9);
    const CMatrix rebuilt = u * again.eigenvalues().cast<Complex>().asDiagonal() * u.adjoint();
    CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }
}
