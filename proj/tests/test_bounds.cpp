#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qunc/bounds.hpp"
#include "qunc/error.hpp"
#include "qunc/generators.hpp"

using namespace qunc;
using oracle::diag2;

namespace {

struct Pauli {
  DensityMatrix rho = make_density(diag2(0.25, 0.75));
  HermitianMatrix a = make_hermitian(oracle::pauli_x());
  HermitianMatrix b = make_hermitian(oracle::pauli_y());
};

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

TEST_CASE("robertson_bound") {
  const Pauli p;
  CHECK(robertson_bound(p.rho, p.a, p.b) == doctest::Approx(0.25).epsilon(1e-14));
  const HermitianMatrix z = make_hermitian(oracle::pauli_z());
  CHECK(robertson_bound(p.rho, z, make_hermitian(diag2(2.0, -1.0))) == 0.0);
  CHECK(robertson_bound(maximally_mixed(2), p.a, p.b) < 1e-30);
}

TEST_CASE("naive_q_bound") {
  const Pauli p;
  CHECK(naive_q_bound(p.rho, p.a, p.b, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(naive_q_bound(p.rho, p.a, p.b, 1.0) - robertson_bound(p.rho, p.a, p.b)) < 1e-12);
  const HermitianMatrix zero = make_hermitian(CMatrix::Identity(2, 2));
  CHECK(naive_q_bound(p.rho, zero, p.b, 0.3) == 0.0);
}

TEST_CASE("refined_coefficient") {
  CHECK(refined_coefficient(1.0, 0.25, 0.75).value == doctest::Approx(1.0).epsilon(1e-15));
  for (double q : {0.0, 0.2, 0.5, 1.0, -0.7}) {
    const double m = std::abs(q);
    CHECK(refined_coefficient(q, 0.0, 0.6).value == 1.0 / ((1 + m) * (1 + m)));
  }
  for (double q : {0.0, 0.3, 0.9}) {
    const double l = 1.0 / 3.0;
    CHECK(refined_coefficient(q, l, l).value ==
          doctest::Approx(1.0 / ((1 - q) * (1 - q))).epsilon(1e-14));
  }
  // |q| > 1 branch: (|q| ln + l1)^2 / ((1+|q|)^2 (|q| ln - l1)^2)
  CHECK(refined_coefficient(-2.0, 0.25, 0.75).value ==
        doctest::Approx(1.75 * 1.75 / (9.0 * 1.25 * 1.25)).epsilon(1e-14));
  CHECK(refined_coefficient(1.0, 0.5, 0.5).infinite);
  CHECK(refined_coefficient(-1.0, 0.5, 0.5).infinite);
  CHECK_FALSE(refined_coefficient(1.5, 0.5, 0.5).infinite);

  CHECK(code_of([] { refined_coefficient(0.5, 0.7, 0.3); }) == ErrorCode::InvalidSpectrum);
  CHECK(code_of([] { refined_coefficient(0.5, -0.1, 0.3); }) == ErrorCode::InvalidSpectrum);
  CHECK(code_of([] { refined_coefficient(0.5, 0.0, 0.0); }) == ErrorCode::InvalidSpectrum);
}

TEST_CASE("refined_q_bound closed forms") {
  const Pauli p;
  CHECK(refined_q_bound(p.rho, p.a, p.b, 0.5) == doctest::Approx(0.49).epsilon(1e-12));
  for (double prob : {0.55, 0.75, 0.9, 0.99}) {
    const DensityMatrix rho = make_density(diag2(1 - prob, prob));
    CHECK(refined_q_bound(rho, p.a, p.b, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
    for (double q : {0.1, 0.5, 0.8})
      CHECK(refined_q_bound(rho, p.a, p.b, q) ==
            doctest::Approx(oracle::pauli_refined(prob, q)).epsilon(1e-12));
  }
  CHECK(refined_q_bound(maximally_mixed(2), p.a, p.b, 0.5) < 1e-30);
  // q = 0 reduces to |Tr[rho A0 B0]|^2 = |i Tr[rho sz]|^2.
  CHECK(refined_q_bound(p.rho, p.a, p.b, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
  // Maximally mixed at |q| = 1 hits the vanishing denominator with a zero trace.
  CHECK(refined_q_bound(maximally_mixed(2), p.a, p.b, 1.0) == 0.0);
  CHECK(refined_q_bound(maximally_mixed(3), make_hermitian(CMatrix::Identity(3, 3)),
                        make_hermitian(CMatrix::Identity(3, 3)), -1.0) == 0.0);
}

TEST_CASE("refined_q_bound raises on an inconsistent degenerate instance") {
  // lambda_n - lambda_1 ~ 1e-9 keeps the denominator under 1e-14 while the
  // commutator trace, proportional to the gap, stays above 1e-12 once A, B
  // are scaled up.
  const double gap = 1e-9;
  const DensityMatrix rho = make_density(diag2(0.5 - gap / 2, 0.5 + gap / 2));
  const HermitianMatrix a = make_hermitian(1e4 * oracle::pauli_x());
  const HermitianMatrix b = make_hermitian(1e4 * oracle::pauli_y());
  CHECK(code_of([&] { refined_q_bound(rho, a, b, 1.0); }) == ErrorCode::DegenerateCoefficient);
}

TEST_CASE("kimura_bound") {
  const Pauli p;
  CHECK(kimura_bound(p.rho, p.a, p.b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kimura_bound(maximally_mixed(2), p.a, p.b) == 0.0);
  const HermitianMatrix z = make_hermitian(oracle::pauli_z());
  CHECK(kimura_bound(p.rho, z, make_hermitian(diag2(3.0, 1.0))) == 0.0);
}

TEST_CASE("lemma_G and lemma_F values") {
  CHECK(lemma_G(1.0, 1.0) == 0.0);
  CHECK(lemma_G(7.3, 0.0) == 1.0);
  CHECK(lemma_G(3.0, -1.0) == doctest::Approx(0.25).epsilon(1e-15));
  for (double q : {0.0, 0.3, -0.8, 1.0}) CHECK(std::abs(lemma_F(1.0, q)) < 1e-12);
  for (double t : {1.0, 2.5, 40.0}) {
    CHECK(lemma_F(t, 0.0) == 0.0);
    CHECK(std::abs(lemma_F(t, 1.0)) < 1e-9 * t * t * t * t);
  }
  CHECK(code_of([] { lemma_G(0.5, 0.2); }) == ErrorCode::DomainError);
  CHECK(code_of([] { lemma_F(0.99, 0.2); }) == ErrorCode::DomainError);
}

TEST_CASE("schwarz_intermediate") {
  const Pauli p;
  // lhs = |-0.75 i|^2; rhs = (0.125 + 0.625)^2 from the two off-diagonal weights.
  const SchwarzTerms s = schwarz_intermediate(p.rho, p.a, p.b, 0.5);
  CHECK(s.lhs == doctest::Approx(0.5625).epsilon(1e-14));
  CHECK(s.rhs == doctest::Approx(0.5625).epsilon(1e-14));

  const HermitianMatrix zero = make_hermitian(CMatrix::Zero(2, 2));
  const SchwarzTerms z = schwarz_intermediate(p.rho, zero, p.b, 0.5);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);

  const SchwarzTerms mm = schwarz_intermediate(maximally_mixed(2), p.a, p.b, 1.0);
  CHECK(mm.lhs < 1e-30);
  CHECK(code_of([&] { schwarz_intermediate(p.rho, p.a, p.b, 1.5); }) == ErrorCode::DomainError);
}

TEST_CASE("bound_report") {
  const Pauli p;
  const BoundReport r = bound_report(p.rho, p.a, p.b, 0.5);
  CHECK(r.dim == 2);
  CHECK(r.regime == QRegime::PositiveLeqOne);
  CHECK(r.robertson == doctest::Approx(0.25));
  CHECK(r.naive_q == doctest::Approx(0.25));
  CHECK(r.refined == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(r.product == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.slack == doctest::Approx(0.51).epsilon(1e-12));
  CHECK_FALSE(r.kimura.has_value());
  REQUIRE(r.ratio.has_value());

  const BoundReport eq = bound_report(p.rho, p.a, p.b, 1.0);
  CHECK(std::abs(eq.refined - 1.0) < 1e-12);
  CHECK(std::abs(eq.slack) < 1e-12);
  REQUIRE(eq.ratio.has_value());
  CHECK(std::abs(*eq.ratio - 1.0) < 1e-12);
  REQUIRE(eq.kimura.has_value());
  CHECK(std::abs(*eq.kimura - eq.refined) < 1e-12);

  const BoundReport same = bound_report(p.rho, p.a, p.a, 0.3);
  CHECK(same.var_a == same.var_b);
  CHECK(same.refined <= same.product + 1e-12);

  const BoundReport flat = bound_report(p.rho, make_hermitian(CMatrix::Identity(2, 2)), p.b, 0.3);
  CHECK_FALSE(flat.ratio.has_value());
  CHECK(flat.slack == doctest::Approx(0.0));
}

TEST_CASE("property: master inequality, dominance, regime consistency, identities") {
  SeededRng root(99);
  const double exact_q[] = {-1.0, 0.0, 1.0};
  for (std::size_t trial = 0; trial < 2000; ++trial) {
    SeededRng rng = root.derive(trial);
    const std::size_t n = 2 + trial % 7;
    const std::size_t rank = trial % 2 ? 1 + trial % (n - 1) : n;
    const DensityMatrix rho = random_density(n, rank, rng);
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = random_hermitian(n, rng);
    const double q = trial % 4 == 0 ? exact_q[(trial / 4) % 3] : rng.uniform(-3.0, 3.0);

    const BoundReport r = bound_report(rho, a, b, q);
    CHECK(r.refined >= 0.0);
    CHECK(r.naive_q >= 0.0);
    CHECK(r.robertson >= 0.0);
    CHECK(r.satisfies());

    const double theorem = oracle::theorem_bound(rho, a.matrix(), b.matrix(), q);
    CHECK(oracle::relative_gap(r.refined, theorem) < 1e-10);
    if (std::abs(q) > 1.0)
      CHECK(oracle::relative_gap(r.refined, oracle::reciprocal_route(rho, a.matrix(), b.matrix(), q)) <
            1e-10);

    if (std::abs(q) <= 1.0 && rho.lambda_min() > 1e-6) CHECK(r.refined >= r.naive_q - 1e-12);
    if (rho.lambda_min() == 0.0 && std::abs(q) <= 1.0)
      CHECK(oracle::relative_gap(r.refined, r.naive_q) < 1e-12);

    const double kim = kimura_bound(rho, a, b);
    CHECK(oracle::relative_gap(kim, refined_q_bound(rho, a, b, 1.0)) < 1e-12);
    CHECK(std::abs(naive_q_bound(rho, a, b, 1.0) - robertson_bound(rho, a, b)) <
          1e-12 * std::max(1.0, robertson_bound(rho, a, b)));

    if (std::abs(q) <= 1.0) {
      const SchwarzTerms s = schwarz_intermediate(rho, center(a, rho), center(b, rho), q);
      CHECK(s.lhs <= s.rhs + 1e-9 * std::max(1.0, s.rhs));
    }
  }
}

TEST_CASE("property: lemma grids") {
  for (int qi = 0; qi <= 10; ++qi) {
    const double q = 0.1 * qi;
    double prev = lemma_G(1.0, q);
    for (int k = 1; k <= 9900; ++k) {
      const double t = 1.0 + 0.01 * k;
      const double g = lemma_G(t, q);
      CHECK_MESSAGE(g >= prev - 1e-12, "t=" << t << " q=" << q);
      prev = g;
      CHECK(lemma_F(t, q) >= -1e-9);
    }
  }
}
