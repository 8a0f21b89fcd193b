#include "hcss/jet.hpp"

#include <cmath>

namespace hcss {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

} // namespace

Jet Jet::constant(Complex value, int order, Complex center) {
  if (order < 0) throw DomainError("Jet: negative order");
  Jet j;
  j.center_ = center;
  j.coef_.assign(static_cast<size_t>(order) + 1, Complex(0.0));
  j.coef_[0] = value;
  return j;
}

Jet Jet::variable(Complex x, int order) {
  Jet j = constant(x, order, x);
  if (order >= 1) j.coef_[1] = 1.0;
  return j;
}

Jet Jet::from_derivatives(Complex center, std::span<const Complex> derivs) {
  if (derivs.empty()) throw DomainError("Jet: need at least the value");
  Jet j;
  j.center_ = center;
  j.coef_.resize(derivs.size());
  double kfac = 1.0;
  for (size_t k = 0; k < derivs.size(); ++k) {
    if (k > 1) kfac *= static_cast<double>(k);
    j.coef_[k] = derivs[k] / kfac;
  }
  return j;
}

Jet Jet::from_coefficients(Complex center, std::vector<Complex> coef) {
  if (coef.empty()) throw DomainError("Jet: need at least the value");
  Jet j;
  j.center_ = center;
  j.coef_ = std::move(coef);
  return j;
}

Complex Jet::derivative(int k) const {
  if (k < 0 || k > order()) throw DomainError("Jet: derivative order out of range");
  return coef_[static_cast<size_t>(k)] * factorial(k);
}

Jet Jet::truncated(int order) const {
  if (order < 0) throw DomainError("Jet: negative order");
  Jet j = *this;
  j.coef_.resize(static_cast<size_t>(order) + 1, Complex(0.0));
  return j;
}

void Jet::require_same_shape(const Jet& other) const {
  if (coef_.size() != other.coef_.size())
    throw DomainError("Jet: mixed orders in arithmetic");
  if (std::abs(center_ - other.center_) > 1e-9 * (1.0 + std::abs(center_)))
    throw DomainError("Jet: mixed expansion centers in arithmetic");
}

Jet Jet::operator-() const {
  Jet j = *this;
  for (auto& c : j.coef_) c = -c;
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  a.require_same_shape(b);
  Jet j = a;
  for (size_t k = 0; k < j.coef_.size(); ++k) j.coef_[k] += b.coef_[k];
  return j;
}

Jet operator-(const Jet& a, const Jet& b) {
  a.require_same_shape(b);
  Jet j = a;
  for (size_t k = 0; k < j.coef_.size(); ++k) j.coef_[k] -= b.coef_[k];
  return j;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.require_same_shape(b);
  Jet j = Jet::constant(0.0, a.order(), a.center_);
  const size_t n = a.coef_.size();
  for (size_t i = 0; i < n; ++i) {
    if (a.coef_[i] == Complex(0.0)) continue;
    for (size_t k = i; k < n; ++k) j.coef_[k] += a.coef_[i] * b.coef_[k - i];
  }
  return j;
}

Jet operator+(const Jet& a, Complex s) {
  Jet j = a;
  j.coef_[0] += s;
  return j;
}

Jet operator*(const Jet& a, Complex s) {
  Jet j = a;
  for (auto& c : j.coef_) c *= s;
  return j;
}

Jet Jet::reciprocal() const {
  const Complex a0 = coef_[0];
  if (a0 == Complex(0.0)) throw DomainError("Jet: reciprocal of zero value");
  Jet j = constant(1.0 / a0, order(), center_);
  for (int k = 1; k <= order(); ++k) {
    Complex s = 0.0;
    for (int i = 1; i <= k; ++i) s += coef_[static_cast<size_t>(i)] * j.coef_[static_cast<size_t>(k - i)];
    j.coef_[static_cast<size_t>(k)] = -s / a0;
  }
  return j;
}

Jet Jet::exp() const {
  Jet j = constant(std::exp(coef_[0]), order(), center_);
  for (int k = 1; k <= order(); ++k) {
    Complex s = 0.0;
    for (int i = 1; i <= k; ++i)
      s += static_cast<double>(i) * coef_[static_cast<size_t>(i)] * j.coef_[static_cast<size_t>(k - i)];
    j.coef_[static_cast<size_t>(k)] = s / static_cast<double>(k);
  }
  return j;
}

Jet Jet::log() const {
  const Complex a0 = coef_[0];
  if (a0 == Complex(0.0)) throw DomainError("Jet: log of zero value");
  Jet j = constant(std::log(a0), order(), center_);
  for (int k = 1; k <= order(); ++k) {
    Complex s = coef_[static_cast<size_t>(k)] * static_cast<double>(k);
    for (int i = 1; i < k; ++i)
      s -= static_cast<double>(i) * j.coef_[static_cast<size_t>(i)] * coef_[static_cast<size_t>(k - i)];
    j.coef_[static_cast<size_t>(k)] = s / (static_cast<double>(k) * a0);
  }
  return j;
}

Jet Jet::pow(Complex z) const {
  const Complex a0 = coef_[0];
  if (a0 == Complex(0.0)) throw DomainError("Jet: pow at zero value");
  Jet j = constant(std::pow(a0, z), order(), center_);
  for (int k = 1; k <= order(); ++k) {
    Complex s = 0.0;
    for (int i = 1; i <= k; ++i) {
      const Complex w = (z + 1.0) * (static_cast<double>(i) / static_cast<double>(k)) - 1.0;
      s += w * coef_[static_cast<size_t>(i)] * j.coef_[static_cast<size_t>(k - i)];
    }
    j.coef_[static_cast<size_t>(k)] = s / a0;
  }
  return j;
}

Jet Jet::pow_int(int n) const {
  if (n < 0) return reciprocal().pow_int(-n);
  Jet acc = constant(1.0, order(), center_);
  Jet base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Jet Jet::recentered(Complex new_center) const {
  const Complex shift = new_center - center_;
  const int n = order();
  std::vector<Complex> out(coef_.size(), Complex(0.0));
  // out[j] = sum_{i >= j} c_i binom(i, j) shift^{i-j}
  for (int i = 0; i <= n; ++i) {
    Complex binom_pow = 1.0; // binom(i, j) shift^{i-j}, built from j = i down
    for (int j = i; j >= 0; --j) {
      out[static_cast<size_t>(j)] += coef_[static_cast<size_t>(i)] * binom_pow;
      if (j > 0)
        binom_pow *= shift * (static_cast<double>(j) / static_cast<double>(i - j + 1));
    }
  }
  Jet j;
  j.center_ = new_center;
  j.coef_ = std::move(out);
  return j;
}

Jet Jet::compose(const Jet& outer, const Jet& inner) {
  if (std::abs(outer.center_ - inner.value()) > 1e-8 * (1.0 + std::abs(outer.center_)))
    throw DomainError("Jet: compose requires outer expanded at inner value");
  const int n = std::min(outer.order(), inner.order());
  // Horner in the inner increment (inner with its constant term removed).
  Jet u = inner.truncated(n);
  u.coef_[0] = 0.0;
  Jet acc = Jet::constant(outer.coef_[static_cast<size_t>(n)], n, inner.center_);
  for (int k = n - 1; k >= 0; --k) acc = acc * u + outer.coef_[static_cast<size_t>(k)];
  return acc;
}

} // namespace hcss
