#pragma once

#include <complex>
#include <functional>

#include "hcss/errors.hpp"

namespace hcss {

using Complex = std::complex<double>;

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 2000;
  // The interval is seeded with this many equal panels before adaptation,
  // so integrands supported on a narrow interior window cannot hide between
  // the nodes of a single panel.
  int initial_panels = 10;
};

struct QuadResult {
  Complex value{0.0};
  double err_est = 0.0;
  int panels = 0;
  bool converged = true;
};

using Integrand = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod 7/15 on a finite interval.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// Integral over (0, inf) via the substitution r = u/(1-u). Right choice for
// integrands with compact support or super-algebraic decay.
QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec = {});

// Integral over (0, inf) by the exp-sinh double-exponential rule. Handles
// algebraic tails s^{-1-eps} and integrable endpoint singularities s^{eps-1},
// which defeat the rational substitution above.
QuadResult integrate_exp_sinh(const Integrand& f, const QuadratureSpec& spec = {});

// Same, raising ConvergenceError when the panel budget runs out.
Complex integrate_checked(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});
Complex integrate_half_line_checked(const Integrand& f, const QuadratureSpec& spec = {});
Complex integrate_exp_sinh_checked(const Integrand& f, const QuadratureSpec& spec = {});

} // namespace hcss
