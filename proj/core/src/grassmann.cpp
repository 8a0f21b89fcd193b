#include "hcss/grassmann.hpp"

#include <bit>
#include <cmath>

namespace hcss {

GrassmannElement::GrassmannElement(int num_generators) : n_(num_generators) {
  if (n_ < 0 || n_ > kMaxGenerators)
    throw DomainError("GrassmannElement: generator count must be in [0, 16]");
  if (n_ % 2 != 0)
    throw DomainError("GrassmannElement: generator count must be even (2q)");
  coef_.assign(size_t{1} << n_, Complex(0.0));
}

GrassmannElement GrassmannElement::scalar(int num_generators, Complex value) {
  GrassmannElement g(num_generators);
  g.coef_[0] = value;
  return g;
}

GrassmannElement GrassmannElement::generator(int num_generators, int index) {
  GrassmannElement g(num_generators);
  if (index < 0 || index >= num_generators)
    throw DomainError("GrassmannElement: generator index out of range");
  g.coef_[uint32_t{1} << index] = 1.0;
  return g;
}

void GrassmannElement::set_coefficient(uint32_t mask, Complex value) {
  if (mask >= coef_.size()) throw DomainError("GrassmannElement: mask out of range");
  coef_[mask] = value;
}

int grassmann_sign(uint32_t a, uint32_t b) {
  if (a & b) return 0;
  // Count transpositions moving each generator of b past the generators of a
  // that sit above it.
  int swaps = 0;
  uint32_t rest = b;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a >> (i + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement g = *this;
  for (auto& c : g.coef_) c = -c;
  return g;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n_ != b.n_) throw DomainError("GrassmannElement: mismatched generator counts");
  GrassmannElement g = a;
  for (size_t m = 0; m < g.coef_.size(); ++m) g.coef_[m] += b.coef_[m];
  return g;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n_ != b.n_) throw DomainError("GrassmannElement: mismatched generator counts");
  GrassmannElement g = a;
  for (size_t m = 0; m < g.coef_.size(); ++m) g.coef_[m] -= b.coef_[m];
  return g;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n_ != b.n_) throw DomainError("GrassmannElement: mismatched generator counts");
  GrassmannElement g(a.n_);
  const size_t dim = g.coef_.size();
  for (size_t ma = 0; ma < dim; ++ma) {
    const Complex ca = a.coef_[ma];
    if (ca == Complex(0.0)) continue;
    for (size_t mb = 0; mb < dim; ++mb) {
      const Complex cb = b.coef_[mb];
      if (cb == Complex(0.0)) continue;
      const int sign = grassmann_sign(static_cast<uint32_t>(ma), static_cast<uint32_t>(mb));
      if (sign == 0) continue;
      g.coef_[ma | mb] += static_cast<double>(sign) * ca * cb;
    }
  }
  return g;
}

GrassmannElement operator*(const GrassmannElement& a, Complex s) {
  GrassmannElement g = a;
  for (auto& c : g.coef_) c *= s;
  return g;
}

GrassmannElement GrassmannElement::pow_int(int k) const {
  if (k < 0) throw DomainError("GrassmannElement: negative power");
  GrassmannElement acc = scalar(n_, 1.0);
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

bool GrassmannElement::is_even() const {
  for (size_t m = 0; m < coef_.size(); ++m)
    if (coef_[m] != Complex(0.0) && std::popcount(static_cast<uint32_t>(m)) % 2 != 0) return false;
  return true;
}

bool GrassmannElement::is_homogeneous(int parity) const {
  for (size_t m = 0; m < coef_.size(); ++m)
    if (coef_[m] != Complex(0.0) && std::popcount(static_cast<uint32_t>(m)) % 2 != parity) return false;
  return true;
}

double GrassmannElement::max_abs() const {
  double m = 0.0;
  for (const auto& c : coef_) m = std::max(m, std::abs(c));
  return m;
}

EvenNilpotent norm_squared(std::span<const Complex> even_values, int q) {
  GrassmannElement soul(2 * q);
  for (int j = 0; j < q; ++j)
    soul.set_coefficient((uint32_t{1} << (2 * j)) | (uint32_t{1} << (2 * j + 1)), 2.0);
  Complex body = 0.0;
  for (const Complex& v : even_values) body += v * v;
  return EvenNilpotent{body, soul};
}

GrassmannElement apply_analytic(const Jet& g, const EvenNilpotent& x) {
  const int q = x.num_generators() / 2;
  if (g.order() < q)
    throw DomainError("apply_analytic: jet order too low (need q derivatives)");
  if (std::abs(g.center() - x.body) > 1e-9 * (1.0 + std::abs(x.body)))
    throw DomainError("apply_analytic: jet not centered at the body");
  GrassmannElement acc = GrassmannElement::scalar(x.num_generators(), g.coefficient(0));
  GrassmannElement soul_pow = GrassmannElement::scalar(x.num_generators(), 1.0);
  for (int k = 1; k <= q; ++k) {
    soul_pow = soul_pow * x.soul;
    acc = acc + soul_pow * g.coefficient(k); // g^(k)/k! is the Taylor coefficient
  }
  return acc;
}

} // namespace hcss
