#include <doctest.h>

#include <cmath>
#include <random>

#include "hcss/jet.hpp"

using namespace hcss;

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Jet random_jet(std::mt19937& rng, double center, int order) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Complex> d(static_cast<size_t>(order) + 1);
  for (auto& v : d) v = Complex(unif(rng), unif(rng));
  return Jet::from_derivatives(center, d);
}

} // namespace

TEST_CASE("jet: derivatives of exp at 0 are all 1") {
  const Jet e = Jet::variable(0.0, 6).exp();
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(e.derivative(k) - 1.0) < 1e-14);
}

TEST_CASE("jet: log(1+r) jet at r = 1") {
  const Jet j = (Jet::variable(1.0, 2) + Complex(1.0)).log();
  CHECK(std::abs(j.derivative(0) - std::log(2.0)) < 1e-15);
  CHECK(std::abs(j.derivative(1) - 0.5) < 1e-15);
  CHECK(std::abs(j.derivative(2) - (-0.25)) < 1e-15);
}

TEST_CASE("jet: complex power matches falling factorials on (1+x)^z") {
  const Complex z(1.7, -0.4);
  const Jet j = (Jet::variable(0.0, 5) + Complex(1.0)).pow(z);
  Complex falling = 1.0;
  for (int k = 0; k <= 5; ++k) {
    CHECK(std::abs(j.derivative(k) - falling) < 1e-13 * std::abs(falling));
    falling *= z - static_cast<double>(k);
  }
}

TEST_CASE("jet: product obeys the Leibniz rule on random jets") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Jet a = random_jet(rng, 0.3, 6);
    const Jet b = random_jet(rng, 0.3, 6);
    const Jet ab = a * b;
    for (int k = 0; k <= 6; ++k) {
      Complex leibniz = 0.0;
      for (int i = 0; i <= k; ++i) {
        const double binom = factorial(k) / (factorial(i) * factorial(k - i));
        leibniz += binom * a.derivative(i) * b.derivative(k - i);
      }
      CHECK(std::abs(ab.derivative(k) - leibniz) < 1e-12);
    }
  }
}

TEST_CASE("jet: reciprocal and sqrt invert") {
  std::mt19937 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    Jet a = random_jet(rng, 1.0, 5);
    a = a + Complex(3.0); // keep the value away from 0
    const Jet one = a * a.reciprocal();
    CHECK(std::abs(one.derivative(0) - 1.0) < 1e-13);
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(one.derivative(k)) < 1e-12);

    const Jet back = a.sqrt() * a.sqrt();
    for (int k = 0; k <= 5; ++k)
      CHECK(std::abs(back.derivative(k) - a.derivative(k)) < 1e-12);
  }
}

TEST_CASE("jet: exp/log round trip") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    Jet a = random_jet(rng, 0.0, 6) + Complex(2.5);
    const Jet round = a.exp().log();
    for (int k = 0; k <= 6; ++k)
      CHECK(std::abs(round.derivative(k) - a.derivative(k)) < 1e-11);
  }
}

TEST_CASE("jet: composition matches direct evaluation on polynomials") {
  // outer(x) = x^3 - 2 x + 1 composed with inner(r) = r^2 + r at r0 = 0.7.
  const double r0 = 0.7;
  const int n = 5;
  const Jet inner = Jet::variable(r0, n).pow_int(2) + Jet::variable(r0, n);
  auto outer_fn = [](const Jet& x) { return x.pow_int(3) - 2.0 * x + Complex(1.0); };
  const Jet outer = outer_fn(Jet::variable(inner.value(), n));
  const Jet composed = Jet::compose(outer, inner);
  // Direct: substitute the polynomial and expand.
  const Jet direct = outer_fn(inner);
  for (int k = 0; k <= n; ++k)
    CHECK(std::abs(composed.derivative(k) - direct.derivative(k)) < 1e-11);
}

TEST_CASE("jet: composition requires matching expansion point") {
  const Jet inner = Jet::variable(2.0, 3);
  const Jet outer = Jet::variable(1.0, 3); // expanded at 1, not at inner.value()
  CHECK_THROWS_AS(Jet::compose(outer, inner), DomainError);
}

TEST_CASE("jet: from_derivatives round trip") {
  const Complex d[] = {Complex(1.0), Complex(-2.0), Complex(0.5, 1.0), Complex(4.0)};
  const Jet j = Jet::from_derivatives(0.25, d);
  for (int k = 0; k <= 3; ++k) CHECK(j.derivative(k) == d[k]);
  CHECK(j.order() == 3);
  CHECK(j.center() == Complex(0.25));
}

TEST_CASE("jet: errors") {
  CHECK_THROWS_AS(Jet::variable(0.0, 3).pow(Complex(0.5)), DomainError); // zero value
  CHECK_THROWS_AS(Jet::constant(0.0, 2).reciprocal(), DomainError);
  CHECK_THROWS_AS(Jet::variable(0.0, 2).derivative(3), DomainError);
}
