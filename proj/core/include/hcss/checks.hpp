#pragma once

#include <string>
#include <vector>

#include "hcss/radial.hpp"

namespace hcss {

// One named check: observed measure vs. its bound.
struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double bound = 0.0;
  std::string note;
};

const std::vector<std::string>& verify_suite_names();

// Runs one of: localization, cfunc, series, jacobi, gl11, ode, symmetry,
// cutoff. Throws ParseError for unknown names.
std::vector<CheckResult> run_verify_suite(const std::string& name);

// Deterministic compactly supported even test profile (polynomial in r^2
// times a smooth falling bump), used by the dimension-shift checks.
RadialProfile random_bump_profile(unsigned seed);

} // namespace hcss
