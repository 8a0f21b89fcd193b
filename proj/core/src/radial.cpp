#include "hcss/radial.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hcss/errors.hpp"

namespace hcss {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double minus_pi_pow(int e) {
  double v = 1.0;
  for (int i = 0; i < std::abs(e); ++i) v *= -kPi;
  return e >= 0 ? v : 1.0 / v;
}

} // namespace

RadialProfile gaussian_profile() {
  return RadialProfile{
      [](double r, int order) { return (-(Jet::variable(r, order).pow_int(2))).exp(); },
      "exp(-r^2)"};
}

double BerezinMeasure::normalization() const {
  double v = 1.0;
  for (int i = 0; i < q; ++i) v /= -2.0 * kPi;
  return v;
}

std::pair<int, int> reduce_dims(int p, int q, int k) {
  if (k < 0 || 2 * k > p || k > q)
    throw DomainError("reduce_dims: need 0 <= k <= min(p/2, q)");
  return {p - 2 * k, q - k};
}

Jet sqrt_profile_jet(const RadialProfile& profile, double u0, int order) {
  constexpr double kSwitch = 0.04;
  constexpr int kExtraTerms = 14;
  if (u0 < 0.0) throw DomainError("sqrt_profile_jet: need u0 >= 0");
  if (u0 > kSwitch) {
    const Jet inner = Jet::variable(u0, order).sqrt();
    return Jet::compose(profile.eval(std::sqrt(u0), order), inner);
  }
  const Jet at0 = even_profile_jet(profile, order + kExtraTerms);
  return at0.recentered(u0).truncated(order);
}

Complex sqrt_profile_derivative(const RadialProfile& profile, double u0, int k) {
  return sqrt_profile_jet(profile, u0, k).derivative(k);
}

Jet even_profile_jet(const RadialProfile& profile, int order_in_u) {
  const int n = 2 * order_in_u;
  const Jet f = profile.eval(0.0, n);
  double scale = 0.0;
  for (int k = 0; k <= n; ++k) scale = std::max(scale, std::abs(f.derivative(k)));
  for (int k = 1; k <= n; k += 2) {
    if (std::abs(f.derivative(k)) > 1e-9 * (1.0 + scale))
      throw DomainError("even_profile_jet: profile is not even at r = 0 (" +
                        profile.description + ")");
  }
  std::vector<Complex> derivs(static_cast<size_t>(order_in_u) + 1);
  for (int j = 0; j <= order_in_u; ++j)
    derivs[static_cast<size_t>(j)] = f.derivative(2 * j) * factorial(j) / factorial(2 * j);
  return Jet::from_derivatives(0.0, derivs);
}

Complex localize(int p, int q, const RadialProfile& profile, const QuadratureSpec& quad) {
  if (p < 0 || q < 0) throw DomainError("localize: p, q must be nonnegative");
  if (p == 0) {
    const Jet g = even_profile_jet(profile, q);
    double v = 1.0;
    for (int i = 0; i < q; ++i) v /= -kPi;
    return v * g.derivative(q);
  }
  const double prefactor =
      std::pow(kPi, 0.5 * (p - 2 * q)) * (q % 2 == 0 ? 1.0 : -1.0) / std::tgamma(0.5 * p);
  // Substituting r = w^2 turns int_0^inf r^{p/2-1} h(r) dr into
  // 2 int_0^inf w^{p-1} h(w^2) dw, which has no endpoint singularity.
  auto integrand = [&](double w) {
    const double r = w * w;
    Complex h;
    if (q == 0) {
      h = profile.eval(w, 0).value();
    } else {
      h = sqrt_profile_derivative(profile, r, q);
    }
    return 2.0 * std::pow(w, p - 1) * h;
  };
  return prefactor * integrate_half_line_checked(integrand, quad);
}

Complex radial_integral(int p, int q, const RadialProfile& profile, const QuadratureSpec& quad) {
  if (p < 0 || q < 0) throw DomainError("radial_integral: p, q must be nonnegative");
  const int m = p - 2 * q;
  if (m > 0) {
    const double prefactor = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
    auto integrand = [&](double r) {
      return std::pow(r, m - 1) * profile.eval(r, 0).value();
    };
    return prefactor * integrate_half_line_checked(integrand, quad);
  }
  if (m % 2 == 0) {
    const int n = -m; // = 2q - p
    const Jet f = even_profile_jet(profile, n / 2);
    // (-pi)^{m/2} (n/2)! / n! * d^n f0 / dr^n at 0, written through the jet
    // in u = r^2: d^{n/2}/du^{n/2} at 0.
    return minus_pi_pow(m / 2) * f.derivative(n / 2);
  }
  const int k = (1 - m) / 2; // = (2q + 1 - p) / 2
  auto integrand = [&](double w) {
    return 2.0 * sqrt_profile_derivative(profile, w * w, k);
  };
  return minus_pi_pow((m - 1) / 2) * integrate_half_line_checked(integrand, quad);
}

} // namespace hcss
