#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grassmann_route.hpp"
#include "hcss/checks.hpp"
#include "hcss/radial.hpp"

using namespace hcss;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("radial: localize of the gaussian, frozen cases") {
  const RadialProfile g = gaussian_profile();
  CHECK(std::abs(localize(2, 1, g) - 1.0) < 1e-10);
  CHECK(std::abs(localize(0, 1, g) - 1.0 / kPi) < 1e-12);
  CHECK(std::abs(localize(1, 0, g) - std::sqrt(kPi)) < 1e-10);
}

TEST_CASE("radial: gaussian integral equals pi^((p-2q)/2) for p <= 5, q <= 3") {
  const RadialProfile g = gaussian_profile();
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 3; ++q) {
      const double want = std::pow(kPi, 0.5 * (p - 2 * q));
      CHECK(std::abs(radial_integral(p, q, g) - want) < 1e-10);
      CHECK(std::abs(localize(p, q, g) - want) < 1e-10);
    }
  }
}

TEST_CASE("radial: odd-branch frozen case (1,1) -> pi^{-1/2}") {
  CHECK(std::abs(radial_integral(1, 1, gaussian_profile()) - 1.0 / std::sqrt(kPi)) < 1e-10);
}

TEST_CASE("radial: reduce_dims arithmetic and bounds") {
  CHECK(reduce_dims(4, 2, 2) == std::pair{0, 0});
  CHECK(reduce_dims(2, 1, 1) == std::pair{0, 0});
  CHECK(reduce_dims(5, 3, 2) == std::pair{1, 1});
  CHECK_THROWS_AS(reduce_dims(2, 1, 2), DomainError);
  CHECK_THROWS_AS(reduce_dims(3, 0, 1), DomainError);
}

TEST_CASE("radial: dimension-shift invariance on random bump profiles") {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    const RadialProfile profile = random_bump_profile(seed);
    for (int p = 0; p <= 5; ++p) {
      for (int q = 0; q <= 3; ++q) {
        const Complex base = localize(p, q, profile);
        for (int k = 1; 2 * k <= p && k <= q; ++k) {
          const auto [pr, qr] = reduce_dims(p, q, k);
          const Complex reduced = localize(pr, qr, profile);
          CHECK(std::abs(base - reduced) <= 1e-8 * (1.0 + std::abs(base)));
        }
      }
    }
  }
}

TEST_CASE("radial: localize agrees with the Grassmann-engine route") {
  for (unsigned seed = 2; seed <= 5; ++seed) {
    const RadialProfile profile = random_bump_profile(seed);
    for (auto [p, q] : {std::pair{0, 1}, {0, 2}, {2, 1}, {3, 1}, {1, 1}}) {
      const Complex via_localize = localize(p, q, profile);
      const Complex via_grassmann = testing::berezin_integral_grassmann(p, q, profile);
      CHECK(std::abs(via_localize - via_grassmann) <=
            1e-9 * (1.0 + std::abs(via_grassmann)));
    }
  }
}

TEST_CASE("radial: faa di bruno consistency of the even-profile jets") {
  const RadialProfile profile = random_bump_profile(7);
  for (int q = 1; q <= 3; ++q) {
    const Complex lhs = profile.eval(0.0, 2 * q).derivative(2 * q);
    double fac = 1.0;
    for (int i = q + 1; i <= 2 * q; ++i) fac *= i; // (2q)!/q!
    const Complex rhs = fac * even_profile_jet(profile, q).derivative(q);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("radial: sqrt-profile jets match direct jets in u across all scales") {
  // g(u) = exp(-1/(2 - u)) has an exact direct-u jet to compare against.
  auto g_direct = [](double u, int order) {
    return (-(Complex(2.0) - Jet::variable(u, order)).reciprocal()).exp();
  };
  const RadialProfile f{[](double r, int order) {
                          return (-(Complex(2.0) - Jet::variable(r, order).pow_int(2))
                                       .reciprocal())
                              .exp();
                        },
                        "exp(-1/(2-r^2))"};
  for (double u : {0.0, 1e-12, 1e-3, 0.03, 0.05, 0.5, 1.0, 1.5}) {
    for (int k = 0; k <= 4; ++k) {
      const Complex direct = g_direct(u, k).derivative(k);
      const Complex hybrid = sqrt_profile_jet(f, u, k).derivative(k);
      CHECK(std::abs(direct - hybrid) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("radial: non-even profiles are rejected at r = 0") {
  const RadialProfile linear{
      [](double r, int order) { return Jet::variable(r, order) + Complex(1.0); }, "1 + r"};
  CHECK_THROWS_AS(localize(0, 1, linear), DomainError);
  const RadialProfile cubic{
      [](double r, int order) { return Jet::variable(r, order).pow_int(3); }, "r^3"};
  CHECK_THROWS_AS(radial_integral(0, 2, cubic), DomainError);
}

TEST_CASE("radial: berezin measure normalization") {
  CHECK(BerezinMeasure{3, 0}.normalization() == 1.0);
  CHECK(std::abs(BerezinMeasure{0, 1}.normalization() - (-1.0 / (2.0 * kPi))) < 1e-18);
  CHECK(std::abs(BerezinMeasure{2, 2}.normalization() - 1.0 / (4.0 * kPi * kPi)) < 1e-18);
}
