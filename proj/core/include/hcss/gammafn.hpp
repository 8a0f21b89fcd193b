#pragma once

#include <complex>

#include "hcss/errors.hpp"

namespace hcss {

using Complex = std::complex<double>;

// True if z is within tol of a nonpositive integer (a Gamma pole).
bool near_gamma_pole(Complex z, double tol = 1e-12);

// Euler Gamma on the complex plane, Lanczos approximation (g = 7, 9
// coefficients) with the reflection formula for Re z < 0.5. Throws PoleError
// at nonpositive integers.
Complex complex_gamma(Complex z);

// Generalized binomial coefficient C(z, k) = z (z-1) ... (z-k+1) / k!,
// computed as a plain product so no spurious Gamma poles appear.
Complex binomial(Complex z, int k);

} // namespace hcss
