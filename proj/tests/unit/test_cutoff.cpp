#include <doctest.h>

#include <cmath>

#include "hcss/cutoff.hpp"
#include "hcss/errors.hpp"

using namespace hcss;

TEST_CASE("cutoff: plateau, support, and range") {
  const CutoffSpec spec{};
  const SmoothCutoff chi = make_cutoff(spec);
  CHECK(chi(1.0) == 1.0);
  CHECK(chi(spec.plateau_lo) == 1.0);
  CHECK(chi(spec.plateau_hi) == 1.0);
  CHECK(chi(spec.support_hi + 1.0) == 0.0);
  CHECK(chi(spec.support_lo * 0.5) == 0.0);
  for (double r = 0.05; r < 3.5; r += 0.05) {
    CHECK(chi(r) >= 0.0);
    CHECK(chi(r) <= 1.0);
  }
  // Monotone on the ramps.
  CHECK(chi(0.45) < chi(0.55));
  CHECK(chi(2.0) > chi(2.4));
}

TEST_CASE("cutoff: jets on the plateau are (1, 0, 0, ...)") {
  const SmoothCutoff chi = make_cutoff(CutoffSpec{});
  const Jet j = chi.jet(1.2, 8);
  CHECK(j.derivative(0) == Complex(1.0));
  for (int k = 1; k <= 8; ++k) CHECK(j.derivative(k) == Complex(0.0));
  const Jet z = chi.jet(3.1, 6);
  for (int k = 0; k <= 6; ++k) CHECK(z.derivative(k) == Complex(0.0));
}

TEST_CASE("cutoff: ramp jets match finite differences") {
  const SmoothCutoff chi = make_cutoff(CutoffSpec{});
  for (double r : {0.47, 0.52, 2.0, 2.3}) {
    const Jet j = chi.jet(r, 2);
    const double h = 1e-5;
    const double fd1 = (chi(r + h) - chi(r - h)) / (2.0 * h);
    const double fd2 = (chi(r + h) - 2.0 * chi(r) + chi(r - h)) / (h * h);
    CHECK(std::abs(j.derivative(1).real() - fd1) < 1e-5 * (1.0 + std::abs(fd1)));
    CHECK(std::abs(j.derivative(2).real() - fd2) < 1e-3 * (1.0 + std::abs(fd2)));
  }
}

TEST_CASE("cutoff: composition with an inner jet") {
  const SmoothCutoff chi = make_cutoff(CutoffSpec{});
  // chi(r^2 + 1/4) at r = 0.8: inner value 0.89 lies on the rising ramp
  // for the wide spec, on the plateau for the default one.
  const Jet inner = Jet::variable(0.8, 3).pow_int(2) + Complex(0.25);
  const Jet composed = chi.eval(inner);
  CHECK(composed.value() == Complex(1.0)); // 0.89 in [0.6, 1.8]
  const SmoothCutoff wide = make_cutoff(wide_cutoff_spec());
  CHECK(wide.eval(inner).value() == Complex(1.0));
}

TEST_CASE("cutoff: region classification") {
  const SmoothCutoff chi = make_cutoff(CutoffSpec{});
  CHECK(chi.region(1.0) == SmoothCutoff::Region::One);
  CHECK(chi.region(0.5) == SmoothCutoff::Region::Ramp);
  CHECK(chi.region(0.1) == SmoothCutoff::Region::Zero);
  CHECK(chi.region(2.2) == SmoothCutoff::Region::Ramp);
  CHECK(chi.region(5.0) == SmoothCutoff::Region::Zero);
}

TEST_CASE("cutoff: bad ordering rejected") {
  CHECK_THROWS_AS(make_cutoff(CutoffSpec{0.7, 0.6, 1.8, 2.6}), DomainError);
  CHECK_THROWS_AS(make_cutoff(CutoffSpec{0.1, 1.1, 1.8, 2.6}), DomainError);
  CHECK_THROWS_AS(make_cutoff(CutoffSpec{0.1, 0.6, 0.9, 2.6}), DomainError);
}

TEST_CASE("cutoff: one-sided upper bump") {
  const SmoothCutoff bump = SmoothCutoff::upper(1.0, 2.0);
  CHECK(bump(0.0) == 1.0);
  CHECK(bump(-5.0) == 1.0);
  CHECK(bump(1.5) > 0.0);
  CHECK(bump(1.5) < 1.0);
  CHECK(bump(2.5) == 0.0);
}
