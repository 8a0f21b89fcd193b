#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hcss/jet.hpp"
#include "hcss/quadrature.hpp"

namespace hcss {

// Radial profile f0 of a rotationally invariant superfunction on A^{p|2q}:
// f(x) = f0(||x||). The evaluator returns the jet of f0 at the requested
// point; for p > 0 the profile must be even in r (this is checked whenever a
// jet at r = 0 is taken). Evaluators must be stateless: quadrature may call
// them concurrently.
struct RadialProfile {
  std::function<Jet(double r, int order)> eval;
  std::string description;
};

// exp(-r^2)
RadialProfile gaussian_profile();

// The Berezin-Lebesgue normalization on A^{p|2q}.
struct BerezinMeasure {
  int p = 0;
  int q = 0;
  double normalization() const; // (-2 pi)^{-q}
};

// Dimension shift of the localization formula: integrating a rotationally
// invariant profile over A^{p|2q} equals integrating it over
// A^{p-2k|2q-2k} for any integer k <= min(p/2, q).
std::pair<int, int> reduce_dims(int p, int q, int k);

// Berezin integral of f0(||x||) over A^{p|2q} against the Berezin-Lebesgue
// density, reduced to one dimension:
//   p > 0 : pi^{(p-2q)/2} (-1)^q / Gamma(p/2) * int_0^inf r^{p/2-1}
//           d^q/dr^q [f0(sqrt r)] dr
//   p = 0 : (-pi)^{-q} d^q/dr^q [f0(sqrt r)] at r = 0.
Complex localize(int p, int q, const RadialProfile& profile, const QuadratureSpec& quad = {});

// Same integral through the p-2q trichotomy (positive / even nonpositive /
// odd negative); the value depends on p and q only through p - 2q.
Complex radial_integral(int p, int q, const RadialProfile& profile,
                        const QuadratureSpec& quad = {});

// Jet in u of g(u) = f0(sqrt u) at u = u0 >= 0. Away from zero this is the
// plain sqrt composition; near zero (where that route cancels
// catastrophically) it switches to the Taylor expansion of the even
// extension about 0, so profiles must be analytic on a neighborhood of
// u = 0 of radius well above 0.04. Every profile in this library is.
Jet sqrt_profile_jet(const RadialProfile& profile, double u0, int order);

// d^k/du^k [f0(sqrt u)] at u0 > 0.
Complex sqrt_profile_derivative(const RadialProfile& profile, double u0, int k);

// Jet in u of g(u) = f0(sqrt u) at u = 0, using the even extension of f0.
// Throws DomainError if the profile's odd derivatives at 0 do not vanish.
Jet even_profile_jet(const RadialProfile& profile, int order_in_u);

} // namespace hcss
