#include "hcss/gammafn.hpp"

#include <cmath>
#include <numbers>

namespace hcss {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

Complex gamma_lanczos(Complex z) {
  // Valid for Re z >= 0.5.
  z -= 1.0;
  Complex a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace

bool near_gamma_pole(Complex z, double tol) {
  if (z.real() > 0.5) return false;
  const double nearest = std::round(z.real());
  if (nearest > 0.0) return false;
  return std::abs(z.real() - nearest) <= tol && std::abs(z.imag()) <= tol;
}

Complex complex_gamma(Complex z) {
  if (near_gamma_pole(z))
    throw PoleError("complex_gamma: pole at nonpositive integer z = (" +
                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    const Complex s = std::sin(std::numbers::pi * z);
    return std::numbers::pi / (s * gamma_lanczos(1.0 - z));
  }
  return gamma_lanczos(z);
}

Complex binomial(Complex z, int k) {
  if (k < 0) throw DomainError("binomial: negative k");
  Complex num = 1.0;
  double denom = 1.0;
  for (int j = 0; j < k; ++j) {
    num *= z - static_cast<double>(j);
    denom *= static_cast<double>(j + 1);
  }
  return num / denom;
}

} // namespace hcss
