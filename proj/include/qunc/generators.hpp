#pragma once

#include <cstdint>

#include "qunc/hermitian.hpp"

namespace qunc {

/// Counter-based generator: the k-th draw is a pure function of
/// (seed, stream, k), so workers can derive independent sub-streams without
/// sharing state and results do not depend on scheduling.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;
  /// Standard normal via Box-Muller; no cached second variate.
  double normal() noexcept;
  /// Exponential(1), used for uniform simplex sampling.
  double exponential() noexcept;

  /// Child stream keyed by `index`; independent of this generator's counter.
  SeededRng derive(std::uint64_t index) const noexcept;

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

/// (M + M^H)/2 with i.i.d. standard normal real and imaginary parts in M.
HermitianMatrix random_hermitian(std::size_t n, SeededRng& rng);

/// Unitary from the QR decomposition of a complex Ginibre matrix, with the
/// phases of R's diagonal absorbed so the distribution is Haar.
CMatrix random_unitary(std::size_t n, SeededRng& rng);

/// Spectrum uniform on the (rank-1)-simplex padded with n-rank exact zeros,
/// rotated by random_unitary.
DensityMatrix random_density(std::size_t n, std::size_t rank, SeededRng& rng);

/// I/n with the standard basis as eigenframe.
DensityMatrix maximally_mixed(std::size_t n);

}  // namespace qunc
