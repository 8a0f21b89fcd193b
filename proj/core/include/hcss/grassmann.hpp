#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hcss/errors.hpp"
#include "hcss/jet.hpp"

namespace hcss {

// Element of the complex Grassmann algebra on n generators (n = 2q even for
// every use in this library). Coefficients are stored densely, indexed by the
// generator-subset bitmask; monomials are normalized to ascending generator
// order, which fixes all product signs.
class GrassmannElement {
public:
  static constexpr int kMaxGenerators = 16;

  explicit GrassmannElement(int num_generators);
  static GrassmannElement scalar(int num_generators, Complex value);
  static GrassmannElement generator(int num_generators, int index);

  int num_generators() const { return n_; }
  Complex coefficient(uint32_t mask) const { return coef_[mask]; }
  void set_coefficient(uint32_t mask, Complex value);

  // Coefficient of the top monomial eta_1 ... eta_n.
  Complex berezin_top() const { return coef_[coef_.size() - 1]; }

  GrassmannElement operator-() const;
  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const GrassmannElement& a, Complex s);
  friend GrassmannElement operator*(Complex s, const GrassmannElement& a) { return a * s; }

  GrassmannElement pow_int(int k) const;

  // True if every nonzero monomial has even degree.
  bool is_even() const;
  // True if every nonzero monomial has the given degree parity.
  bool is_homogeneous(int parity) const;
  double max_abs() const;

private:
  int n_;
  std::vector<Complex> coef_;
};

// Sign of eta_A * eta_B under ascending-order normalization; 0 if A and B
// overlap.
int grassmann_sign(uint32_t a, uint32_t b);

// Even element split as numeric body plus nilpotent soul (even degrees >= 2).
struct EvenNilpotent {
  Complex body;
  GrassmannElement soul;

  int num_generators() const { return soul.num_generators(); }
};

// The supersymmetric norm square on A^{p|2q} with the even coordinates
// substituted: sum_i v_i^2 + 2 sum_j eta_{2j-1} eta_{2j}.
EvenNilpotent norm_squared(std::span<const Complex> even_values, int q);

// g evaluated on body + soul by Taylor expansion in the soul:
// sum_k g^(k)(body)/k! soul^k. The jet must be centered at the body and
// carry at least q = n/2 derivatives (soul^{q+1} = 0).
GrassmannElement apply_analytic(const Jet& g, const EvenNilpotent& x);

} // namespace hcss
