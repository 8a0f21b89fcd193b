#pragma once

#include "hcss/jet.hpp"

namespace hcss {

// Parameters of the smooth cutoff chi: identically 1 on [plateau_lo,
// plateau_hi] (which must contain 1), identically 0 outside [support_lo,
// support_hi], C-infinity in between, built from exp(-1/x) mollifier ramps.
struct CutoffSpec {
  double support_lo = 0.3;
  double plateau_lo = 0.6;
  double plateau_hi = 1.8;
  double support_hi = 2.6;
};

// The second reference cutoff used by the chi-independence checks.
inline CutoffSpec wide_cutoff_spec() { return CutoffSpec{0.2, 0.4, 2.5, 3.4}; }

// C-infinity plateau function with optional rising and falling edges. Jets of
// any order are available at every point, so the cutoff can ride through the
// d^q/dr^q machinery of the localization formulas.
class SmoothCutoff {
public:
  // chi of CutoffSpec: rises on [a, lo], plateau [lo, hi], falls on [hi, b].
  static SmoothCutoff cutoff(const CutoffSpec& spec);
  // 1 on (-inf, hi], falls smoothly to 0 on [hi, b]. Used for building
  // compactly supported test profiles.
  static SmoothCutoff upper(double hi, double b);

  // Where a point sits relative to the edges; on Zero and One regions all
  // jets are constant, which callers exploit to avoid building extreme
  // intermediate jets.
  enum class Region { Zero, Ramp, One };
  Region region(double r) const;

  double operator()(double r) const;
  Jet jet(double r, int order) const;
  // chi composed with an inner jet (expansion in the inner variable).
  Jet eval(const Jet& arg) const;

private:
  SmoothCutoff() = default;
  bool has_rise_ = false;
  double rise_a_ = 0.0, rise_b_ = 0.0;
  bool has_fall_ = false;
  double fall_a_ = 0.0, fall_b_ = 0.0;
};

SmoothCutoff make_cutoff(const CutoffSpec& spec);

} // namespace hcss
