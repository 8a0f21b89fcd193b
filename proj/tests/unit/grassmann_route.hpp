#pragma once

// Test-only oracle: Berezin integration of a rotationally invariant profile
// over A^{p|2q} done the long way, through the Grassmann engine. The profile
// f0(||x||) is expanded in the odd coordinates via apply_analytic, the top
// coefficient is extracted, and the remaining classical integral over the
// even coordinates is done radially. Entirely independent of the
// localization branch logic in radial.cpp.

#include <cmath>
#include <numbers>

#include "hcss/grassmann.hpp"
#include "hcss/quadrature.hpp"
#include "hcss/radial.hpp"

namespace hcss::testing {

// Top Grassmann coefficient of f0 expanded at even radius-squared u.
inline Complex soul_top(const RadialProfile& profile, double u, int q) {
  // g(u) = f0(sqrt u); the body sits at u, the soul is the norm-square soul.
  const Jet g = sqrt_profile_jet(profile, u, q);
  GrassmannElement soul = norm_squared({}, q).soul;
  return apply_analytic(g, EvenNilpotent{Complex(u), soul}).berezin_top();
}

inline Complex berezin_integral_grassmann(int p, int q, const RadialProfile& profile,
                                          const QuadratureSpec& quad = {}) {
  double norm = 1.0;
  for (int i = 0; i < q; ++i) norm /= -2.0 * std::numbers::pi;

  if (q == 0) {
    // Purely classical radial integral.
    if (p == 0) return profile.eval(0.0, 0).value();
    const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * p) / std::tgamma(0.5 * p);
    auto f = [&](double r) {
      return std::pow(r, p - 1) * profile.eval(r, 0).value();
    };
    return sphere * integrate_half_line_checked(f, quad);
  }

  if (p == 0) return norm * soul_top(profile, 0.0, q);

  // Classical part in polar coordinates: surface of S^{p-1} times the radial
  // integral of the top coefficient.
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * p) / std::tgamma(0.5 * p);
  auto f = [&](double r) {
    return std::pow(r, p - 1) * soul_top(profile, r * r, q);
  };
  return norm * sphere * integrate_half_line_checked(f, quad);
}

} // namespace hcss::testing
