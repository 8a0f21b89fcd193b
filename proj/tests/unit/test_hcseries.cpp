#include <doctest.h>

#include <cmath>
#include <random>

#include "hcss/hcseries.hpp"
#include "hcss/oracle.hpp"

using namespace hcss;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

Complex random_lambda(std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  while (true) {
    const Complex lambda(0.6 + 3.0 * unif(rng), 0.4 * unif(rng));
    const double two_re = 2.0 * lambda.real();
    if (std::abs(two_re - std::round(two_re)) > 0.05 || lambda.imag() > 0.05) return lambda;
  }
}

} // namespace

TEST_CASE("hcseries: frozen coefficients for osp (0,1) at lambda = 3") {
  const auto pair = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  const SeriesCoefficients coeffs = gamma_coeffs(pair, Complex(3.0));
  REQUIRE(coeffs.max_ell() >= 3);
  CHECK(rel(coeffs.gamma[0], Complex(2.0)) < 1e-14);
  CHECK(rel(coeffs.gamma[1], Complex(-4.0)) < 1e-14);
  CHECK(std::abs(coeffs.gamma[2]) <= 1e-12 * std::abs(coeffs.gamma[0]));
  CHECK(std::abs(coeffs.gamma[3]) <= 1e-12 * std::abs(coeffs.gamma[0]));
  CHECK(coeffs.reason == TruncationReason::ExactTermination);
}

TEST_CASE("hcseries: first coefficient identity gamma_1 = (m_a/2)(rho-lambda) g0 / (1-lambda)") {
  std::mt19937 rng(3);
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 1, 0), SymmetricPair::make(Family::Unitary, 0, 2),
        SymmetricPair::make(Family::OrthoSymplectic, 2, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 2)}) {
    for (int i = 0; i < 5; ++i) {
      const Complex lambda = random_lambda(rng);
      const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda);
      const Complex want = 0.5 * pair.m_alpha() * (pair.rho_d() - lambda) * coeffs.gamma[0] /
                           (1.0 - lambda);
      CHECK(std::abs(coeffs.gamma[1] - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("hcseries: recursion certificate holds for every stored coefficient") {
  std::mt19937 rng(4);
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 1, 0), SymmetricPair::make(Family::Unitary, 1, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 1)}) {
    for (int i = 0; i < 5; ++i) {
      SeriesOptions opt;
      opt.t = 0.5;
      const SeriesCoefficients coeffs = gamma_coeffs(pair, random_lambda(rng), opt);
      CHECK(recursion_residual_max(coeffs) <= 1e-12);
    }
  }
}

TEST_CASE("hcseries: tail-bound truncation within 200 terms at t = 1") {
  const auto pair = SymmetricPair::make(Family::Unitary, 1, 0);
  SeriesOptions opt;
  opt.t = 1.0;
  const SeriesCoefficients coeffs = gamma_coeffs(pair, Complex(2.5), opt);
  CHECK(coeffs.reason == TruncationReason::TailBound);
  CHECK(coeffs.max_ell() <= 200);
  CHECK(gangolli_bound_holds(coeffs, 1.0, std::min(12, coeffs.max_ell())));
}

TEST_CASE("hcseries: gangolli bound with fitted constant, 20 random lambdas per pair") {
  std::mt19937 rng(5);
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 0, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 2, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 1)}) {
    for (int i = 0; i < 20; ++i) {
      SeriesOptions opt;
      opt.t = 0.3;
      const SeriesCoefficients coeffs = gamma_coeffs(pair, random_lambda(rng), opt);
      for (double t : {0.3, 1.0, 2.5})
        CHECK(gangolli_bound_holds(coeffs, t, std::min(10, coeffs.max_ell())));
    }
  }
}

TEST_CASE("hcseries: closed osp product form") {
  const auto pair = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  CHECK(rel(gamma_closed_osp(pair, Complex(3.0), 0), Complex(2.0)) < 1e-14);
  CHECK(rel(gamma_closed_osp(pair, Complex(3.0), 1), Complex(-4.0)) < 1e-14);

  std::mt19937 rng(6);
  for (auto [p, q] : {std::pair{2, 1}, {1, 1}, {1, 2}, {0, 3}}) {
    const auto osp = SymmetricPair::make(Family::OrthoSymplectic, p, q);
    for (int i = 0; i < 5; ++i) {
      const Complex lambda = random_lambda(rng);
      SeriesOptions opt;
      opt.t = 0.4;
      opt.min_terms = 12;
      const SeriesCoefficients coeffs = gamma_coeffs(osp, lambda, opt);
      for (int ell = 0; ell <= std::min(10, coeffs.max_ell()); ++ell) {
        const Complex closed = gamma_closed_osp(osp, lambda, ell);
        const double scale = std::abs(coeffs.gamma[0]) + std::abs(closed);
        CHECK(std::abs(closed - coeffs.gamma[static_cast<size_t>(ell)]) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("hcseries: frozen series value for osp (0,1), lambda = 3, t = 1") {
  const auto pair = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  const double e2 = std::exp(2.0), e4 = std::exp(4.0);
  const Complex want(2.0 * e4 - 4.0 * e2); // ~ 79.637
  CHECK(rel(phi_series(pair, Complex(3.0), 1.0), want) < 1e-12);
  // phi_spherical coincides: the Weyl group is trivial for osp p = 0.
  CHECK(rel(phi_spherical(pair, Complex(3.0), 1.0), want) < 1e-12);
}

TEST_CASE("hcseries: normalized series tends to gamma_0 as t grows") {
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 1, 0),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 1)}) {
    const Complex lambda(1.8, 0.3);
    const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda);
    const double t = 10.0;
    const Complex normalized =
        phi_series(pair, lambda, t) * std::exp(-t * (lambda - pair.rho_d()));
    CHECK(std::abs(normalized - coeffs.gamma[0]) <=
          std::abs(coeffs.gamma[1]) * std::exp(-2.0 * t) * 1.02);
  }
}

TEST_CASE("hcseries: weyl symmetry of phi_spherical by construction") {
  const auto pair = SymmetricPair::make(Family::Unitary, 1, 1);
  const Complex lambda(1.3, 0.2);
  const double t = 0.9;
  const Complex direct = phi_spherical(pair, lambda, t);
  const Complex swapped = phi_series(pair, -lambda, t) + phi_series(pair, lambda, t);
  CHECK(rel(direct, swapped) < 1e-15);
}

TEST_CASE("hcseries: exclusion guards") {
  const auto pair = SymmetricPair::make(Family::Unitary, 1, 0);
  CHECK_THROWS_AS(gamma_coeffs(pair, Complex(2.0)), DomainError);
  CHECK_THROWS_AS(gamma_coeffs(pair, Complex(3.0 + 5e-7)), DomainError);
  CHECK_NOTHROW(gamma_coeffs(pair, Complex(3.0, 0.5)));
  CHECK_THROWS_AS(phi_spherical(pair, Complex(2.0), 1.0), DomainError); // integer resonance
  CHECK_NOTHROW(phi_spherical(pair, Complex(2.5), 1.0));                // half-odd is fine
  CHECK_THROWS_AS(phi_spherical(pair, Complex(-1.3), 1.0), DomainError);
  CHECK_THROWS_AS(phi_series(pair, Complex(1.3), 0.01), DomainError); // t below threshold

  // Terminating pairs stay usable at integer lambda beyond the divisions
  // actually performed.
  const auto osp01 = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  CHECK_NOTHROW(gamma_coeffs(osp01, Complex(3.0)));
  CHECK_THROWS_AS(gamma_coeffs(osp01, Complex(1.0)), DomainError); // division at ell = 1
}

TEST_CASE("hcseries: jacobi polynomial P1 closed form") {
  // P_1^{(a,b)}(x) = (a + 1) + (a + b + 2)(x - 1)/2.
  const Complex a(-3.0, 0.4), b(-3.0);
  for (double x : {-0.5, 0.2, 0.9}) {
    const Complex want = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
    CHECK(std::abs(jacobi_polynomial(1, a, b, Complex(x)) - want) < 1e-13);
  }
  CHECK(jacobi_polynomial(0, a, b, Complex(0.3)) == Complex(1.0));
}

TEST_CASE("hcseries: phi_jacobi equals minus phi_series on osp (0,1)") {
  const auto pair = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  const double e2 = std::exp(2.0), e4 = std::exp(4.0);
  CHECK(rel(phi_jacobi(pair, Complex(3.0), 1.0), Complex(-(2.0 * e4 - 4.0 * e2))) < 1e-12);
  for (Complex lambda : {Complex(2.3), Complex(3.7), Complex(1.8, 0.6)}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const Complex ratio = phi_series(pair, lambda, t) / phi_jacobi(pair, lambda, t);
      CHECK(std::abs(ratio - Complex(-1.0)) < 1e-12);
    }
  }
}

TEST_CASE("hcseries: phi_jacobi normalized limit is the constant Jacobi term") {
  const auto pair = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  const Complex lambda(2.6);
  const double t = 18.0;
  const Complex normalized = phi_jacobi(pair, lambda, t) * std::exp(-t * (lambda + 1.0));
  CHECK(std::abs(normalized - (1.0 - lambda)) < 1e-6);
}

TEST_CASE("hcseries: phi_osp_p0 frozen value and series proportionality") {
  const double e2 = std::exp(2.0), e4 = std::exp(4.0);
  CHECK(rel(phi_osp_p0(1, Complex(3.0), 1.0), Complex(-2.0 * e4 + 4.0 * e2)) < 1e-12);

  // Symmetry k <-> q - k of the binomial sum at lambda = 0.
  const Complex at0 = phi_osp_p0(2, Complex(1e-13), 0.8);
  const Complex flipped = phi_osp_p0(2, Complex(-1e-13), 0.8);
  CHECK(std::abs(at0 - flipped) < 1e-9 * std::abs(at0));

  const auto pair01 = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  for (Complex lambda : {Complex(2.3), Complex(3.7, 0.4)}) {
    for (double t : {0.6, 1.4}) {
      const Complex ratio = phi_osp_p0(1, lambda, t) / phi_series(pair01, lambda, t);
      CHECK(std::abs(ratio - Complex(-1.0)) < 1e-12);
    }
  }
}

TEST_CASE("hcseries: phi_gl11 closed form") {
  // lambda(h) = 0 with alpha(h) = 1: phi = -sinh 1.
  const auto par = make_gl11_param(Complex(1.0), Complex(-1.0), 0.0, 1.0);
  CHECK(std::abs(phi_gl11(par, 0.5, 0.5) - Complex(-std::sinh(1.0))) < 1e-15);
  const auto zero = make_gl11_param(Complex(0.0), Complex(2.0), 0.0, 1.0);
  CHECK(phi_gl11(zero, 0.4, 1.2) == Complex(0.0));

  // Inversion: phi(lambda, -h) = phi(-lambda, h).
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto p1 = make_gl11_param(Complex(unif(rng), unif(rng)),
                                    Complex(unif(rng), unif(rng)), 1.0, 1.0);
    auto p2 = p1;
    p2.mu = -p2.mu;
    p2.nu = -p2.nu;
    const double ap = unif(rng), am = unif(rng);
    CHECK(std::abs(phi_gl11(p1, -ap, -am) - phi_gl11(p2, ap, am)) < 1e-14);
  }
}
