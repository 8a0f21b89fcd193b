#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "hcss/errors.hpp"

namespace hcss {

using Complex = std::complex<double>;

enum class Family { Unitary, OrthoSymplectic, GL11 };

// Exact rational number. Denominators stay tiny here (rho is at worst a
// half-integer), but the arithmetic is kept general.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d);
  static Rational integer(long n) { return Rational(n, 1); }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

// One of the three rank-one symmetric pairs: the unitary family, the
// orthosymplectic family, or the isotropic gl(1|1) pair. Multiplicities and
// rho are derived from (family, p, q); rho is exact so that the finite-series
// and Jacobi branch predicates never depend on floating point.
class SymmetricPair {
public:
  static SymmetricPair make(Family family, int p, int q);

  Family family() const { return family_; }
  int p() const { return p_; }
  int q() const { return q_; }

  int m_alpha() const;
  int m_2alpha() const;
  Rational rho() const;
  double rho_d() const { return rho().value(); }

  // 1 for GL11 and for the orthosymplectic family with p = 0, else 2.
  int weyl_order() const;

  bool anisotropic() const { return family_ != Family::GL11; }

  // Orthosymplectic with even m_alpha <= 0: the Harish-Chandra series
  // terminates and the Jacobi closed form applies.
  bool finite_series() const;

  // CLI spelling: "u:1:1", "osp:2:1", "gl11".
  std::string spec_string() const;
  std::string family_name() const;

private:
  SymmetricPair(Family f, int p, int q) : family_(f), p_(p), q_(q) {}
  Family family_;
  int p_;
  int q_;
};

// Parses "family:p:q" ("u" / "osp"), or the bare "gl11".
SymmetricPair parse_pair(std::string_view text);

// Spectral parameter for the anisotropic families: lambda(h0) with
// alpha(h0) = 1.
struct SpectralParam {
  Complex lambda;
};

// GL(1|1) spectral data: a* is two-dimensional, lambda = (mu, nu) in the
// (h+, h-) basis, and the limit direction h0 = c_plus h+ + c_minus h-.
struct GL11Param {
  Complex mu;
  Complex nu;
  double c_plus = 0.0;
  double c_minus = 1.0;
};

// Validates (c_plus, c_minus) != (0, 0).
GL11Param make_gl11_param(Complex mu, Complex nu, double c_plus, double c_minus);

} // namespace hcss
