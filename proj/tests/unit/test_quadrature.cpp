#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hcss/quadrature.hpp"

using namespace hcss;

TEST_CASE("quadrature: polynomials are exact") {
  const auto r = integrate([](double x) { return Complex(x * x); }, 0.0, 1.0);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-14);
  CHECK(r.converged);
}

TEST_CASE("quadrature: half-line exponential and gaussian") {
  const auto e = integrate_half_line([](double r) { return Complex(std::exp(-r)); });
  CHECK(std::abs(e.value - 1.0) < 1e-12);
  const auto g = integrate_half_line([](double r) { return Complex(std::exp(-r * r)); });
  CHECK(std::abs(g.value - 0.5 * std::sqrt(std::numbers::pi)) < 1e-12);
}

TEST_CASE("quadrature: complex integrand") {
  const auto r = integrate([](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 1.0);
  const Complex want = (std::exp(Complex(0.0, 1.0)) - 1.0) / Complex(0.0, 1.0);
  CHECK(std::abs(r.value - want) < 1e-13);
}

TEST_CASE("quadrature: integrable endpoint singularity") {
  const auto r = integrate([](double x) { return Complex(1.0 / std::sqrt(x)); }, 0.0, 1.0,
                           QuadratureSpec{1e-9, 1e-9, 4000});
  CHECK(std::abs(r.value - 2.0) < 1e-8);
}

TEST_CASE("quadrature: non-integrable integrand exhausts the budget") {
  QuadratureSpec tight{1e-12, 1e-12, 64};
  const auto r = integrate([](double x) { return Complex(1.0 / x); }, 0.0, 1.0, tight);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(integrate_checked([](double x) { return Complex(1.0 / x); }, 0.0, 1.0, tight),
                  ConvergenceError);
}

TEST_CASE("quadrature: empty interval") {
  const auto r = integrate([](double) { return Complex(1.0); }, 2.0, 2.0);
  CHECK(r.value == Complex(0.0));
}
