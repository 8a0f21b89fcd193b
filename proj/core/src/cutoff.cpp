#include "hcss/cutoff.hpp"

#include <cmath>

#include "hcss/errors.hpp"

namespace hcss {

namespace {

// sigma(x) = exp(-1/x) for x > 0, 0 otherwise, as a jet at x.value().
Jet sigma_jet(const Jet& x) {
  const double x0 = x.value().real();
  // exp(-1/x) underflows below ~1/745; the jet is numerically zero there.
  if (x0 <= 1.4e-3) return Jet::constant(0.0, x.order(), x.center());
  return (-x.reciprocal()).exp();
}

// Smoothstep S(x) = sigma(x) / (sigma(x) + sigma(1-x)): 0 for x <= 0,
// 1 for x >= 1.
Jet smoothstep_jet(const Jet& x) {
  const double x0 = x.value().real();
  if (x0 <= 0.0) return Jet::constant(0.0, x.order(), x.center());
  if (x0 >= 1.0) return Jet::constant(1.0, x.order(), x.center());
  const Jet s = sigma_jet(x);
  const Jet t = sigma_jet(1.0 - x);
  return s / (s + t);
}

} // namespace

SmoothCutoff SmoothCutoff::cutoff(const CutoffSpec& spec) {
  if (!(0.0 < spec.support_lo && spec.support_lo < spec.plateau_lo &&
        spec.plateau_lo < 1.0 && 1.0 < spec.plateau_hi &&
        spec.plateau_hi < spec.support_hi))
    throw DomainError("CutoffSpec: need 0 < a < lo < 1 < hi < b");
  SmoothCutoff c;
  c.has_rise_ = true;
  c.rise_a_ = spec.support_lo;
  c.rise_b_ = spec.plateau_lo;
  c.has_fall_ = true;
  c.fall_a_ = spec.plateau_hi;
  c.fall_b_ = spec.support_hi;
  return c;
}

SmoothCutoff SmoothCutoff::upper(double hi, double b) {
  if (!(hi < b)) throw DomainError("SmoothCutoff::upper: need hi < b");
  SmoothCutoff c;
  c.has_fall_ = true;
  c.fall_a_ = hi;
  c.fall_b_ = b;
  return c;
}

SmoothCutoff::Region SmoothCutoff::region(double r) const {
  if (has_rise_ && r < rise_b_)
    return r <= rise_a_ ? Region::Zero : Region::Ramp;
  if (has_fall_ && r > fall_a_)
    return r >= fall_b_ ? Region::Zero : Region::Ramp;
  return Region::One;
}

Jet SmoothCutoff::eval(const Jet& arg) const {
  const double r = arg.value().real();
  const int n = arg.order();
  if (has_rise_ && r < rise_b_) {
    if (r <= rise_a_) return Jet::constant(0.0, n, arg.center());
    return smoothstep_jet((arg - Complex(rise_a_)) * Complex(1.0 / (rise_b_ - rise_a_)));
  }
  if (has_fall_ && r > fall_a_) {
    if (r >= fall_b_) return Jet::constant(0.0, n, arg.center());
    return smoothstep_jet((Complex(fall_b_) - arg) * Complex(1.0 / (fall_b_ - fall_a_)));
  }
  return Jet::constant(1.0, n, arg.center());
}

Jet SmoothCutoff::jet(double r, int order) const { return eval(Jet::variable(r, order)); }

double SmoothCutoff::operator()(double r) const { return jet(r, 0).value().real(); }

SmoothCutoff make_cutoff(const CutoffSpec& spec) { return SmoothCutoff::cutoff(spec); }

} // namespace hcss
