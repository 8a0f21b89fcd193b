#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hcss/errors.hpp"

namespace hcss {

using Complex = std::complex<double>;

// Truncated Taylor expansion of order N about a center point. All arithmetic
// is exact truncated-Taylor algebra; this is the differentiation mechanism
// for every d^q/dr^q the localization formulas ask for (no finite differences
// of profiles anywhere).
//
// Internally the expansion is stored as Taylor coefficients c_k = f^(k)/k!;
// derivative(k) converts back.
class Jet {
public:
  Jet() : center_(0.0), coef_(1, Complex(0.0)) {}

  static Jet constant(Complex value, int order, Complex center = 0.0);
  // The identity function expanded at x: value x, slope 1.
  static Jet variable(Complex x, int order);
  static Jet from_derivatives(Complex center, std::span<const Complex> derivs);
  static Jet from_coefficients(Complex center, std::vector<Complex> coef);

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  Complex center() const { return center_; }
  Complex value() const { return coef_[0]; }
  Complex coefficient(int k) const { return coef_[static_cast<size_t>(k)]; }
  Complex derivative(int k) const;

  Jet truncated(int order) const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator+(const Jet& a, Complex s);
  friend Jet operator+(Complex s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, Complex s) { return a + (-s); }
  friend Jet operator-(Complex s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(const Jet& a, Complex s);
  friend Jet operator*(Complex s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }
  friend Jet operator/(const Jet& a, Complex s) { return a * (1.0 / s); }

  Jet reciprocal() const;
  Jet exp() const;
  Jet log() const;
  // Principal branch; the expansion point must stay away from the cut.
  // Everywhere in this library the base value is a strictly positive real.
  Jet pow(Complex z) const;
  Jet pow_int(int n) const;
  Jet sqrt() const { return pow(Complex(0.5)); }

  // (outer o inner): outer must be expanded at inner.value().
  static Jet compose(const Jet& outer, const Jet& inner);

  // The same truncated polynomial re-expanded about a new center (exact for
  // the stored coefficients; degree stays the same).
  Jet recentered(Complex new_center) const;

private:
  void require_same_shape(const Jet& other) const;

  Complex center_;
  std::vector<Complex> coef_;
};

} // namespace hcss
