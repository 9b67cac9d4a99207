#include "qunc/generators.hpp"

#include <cmath>
#include <numbers>

#include "qunc/error.hpp"

namespace qunc {

namespace {

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

void require_dim(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 1");
}

}  // namespace

std::uint64_t SeededRng::next_u64() noexcept {
  const std::uint64_t key = mix64(seed_ ^ mix64(stream_ + kGolden));
  const std::uint64_t k = counter_++;
  return mix64(key + (k + 1) * kGolden);
}

double SeededRng::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

double SeededRng::normal() noexcept {
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double SeededRng::exponential() noexcept { return -std::log(1.0 - uniform()); }

SeededRng SeededRng::derive(std::uint64_t index) const noexcept {
  return SeededRng(seed_, mix64(stream_ * kGolden + mix64(index + 0x632be59bd9b4e019ULL)));
}

HermitianMatrix random_hermitian(std::size_t n, SeededRng& rng) {
  require_dim(n);
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      m(i, j) = Complex(re, im);
    }
  return make_hermitian(0.5 * (m + m.adjoint()));
}

CMatrix random_unitary(std::size_t n, SeededRng& rng) {
  require_dim(n);
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

DensityMatrix random_density(std::size_t n, std::size_t rank, SeededRng& rng) {
  require_dim(n);
  if (rank < 1 || rank > n) throw Error(ErrorCode::InvalidRank, "rank must lie in [1, n]");
  const auto dim = static_cast<Eigen::Index>(n);
  RVector lambda = RVector::Zero(dim);
  double total = 0.0;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(rank); ++k) {
    lambda(k) = rng.exponential();
    total += lambda(k);
  }
  lambda /= total;
  return DensityMatrix::from_spectrum(lambda, random_unitary(n, rng));
}

DensityMatrix maximally_mixed(std::size_t n) {
  require_dim(n);
  const auto dim = static_cast<Eigen::Index>(n);
  return DensityMatrix::from_spectrum(RVector::Constant(dim, 1.0 / static_cast<double>(n)),
                                      CMatrix::Identity(dim, dim));
}

}  // namespace qunc
