#include "hcss/cfunc.hpp"

#include <cmath>
#include <numbers>

namespace hcss {

namespace {

constexpr double kPi = std::numbers::pi;

double minus_pi_pow(int e) {
  double v = 1.0;
  for (int i = 0; i < std::abs(e); ++i) v *= -kPi;
  return e >= 0 ? v : 1.0 / v;
}

} // namespace

Complex fit_reference_lambda(const SymmetricPair& pair) {
  return Complex(std::abs(pair.rho_d()) + 2.0);
}

Complex c_formula(const SymmetricPair& pair, Complex lambda) {
  if (!pair.anisotropic())
    throw DomainError("c_formula: gl(1|1) has its own c (see c_gl11)");
  const double ma = pair.m_alpha();
  const double m2a = pair.m_2alpha();
  const Complex a1 = 0.5 * (lambda + 0.5 * ma + 1.0);
  const Complex a2 = 0.5 * (lambda + 0.5 * ma + m2a);
  // Poles of the denominator Gammas are zeros of c.
  if (near_gamma_pole(a1) || near_gamma_pole(a2)) return Complex(0.0);
  return std::pow(Complex(2.0), -lambda) * complex_gamma(lambda) /
         (complex_gamma(a1) * complex_gamma(a2));
}

Complex c_gamma_quotient(const SymmetricPair& pair, Complex lambda) {
  if (!pair.anisotropic())
    throw DomainError("c_gamma_quotient: anisotropic families only");
  const Complex shifted = lambda + pair.rho_d();
  if (near_gamma_pole(shifted)) return Complex(0.0);
  return complex_gamma(lambda) / complex_gamma(shifted);
}

CGl11Result c_gl11(const GL11Param& param) {
  if (param.c_minus == 0.0) return {true, Complex(0.0)};
  if (param.c_minus > 0.0) return {true, -0.5 * param.mu};
  return {false, Complex(0.0)};
}

int c_integral_unitary_order(const SymmetricPair& pair) {
  if (pair.family() != Family::Unitary)
    throw DomainError("c_integral_unitary: unitary family only");
  if (pair.m_alpha() > 0)
    throw DomainError("c_integral_unitary: needs m_alpha <= 0");
  return -pair.m_alpha() / 2; // = 1 - rho
}

Complex c_integral_unitary(const SymmetricPair& pair, Complex lambda,
                           const QuadratureSpec& quad) {
  const int k = c_integral_unitary_order(pair);
  if (!(lambda.real() > 0.0)) throw DomainError("c_integral_unitary: need Re lambda > 0");
  const double rho = pair.rho_d();
  auto integrand = [&](double s) {
    const Jet r = Jet::variable(0.0, k);
    return psi0_jet(1.0, r, s).pow(-0.5 * (lambda + rho)).derivative(k);
  };
  return integrate_exp_sinh_checked(integrand, quad);
}

std::pair<Complex, Complex> c_integral_unitary_split(const SymmetricPair& pair, Complex lambda,
                                                     const CutoffSpec& cutoff,
                                                     const QuadratureSpec& quad) {
  const int k = c_integral_unitary_order(pair);
  if (!(lambda.real() > 0.0)) throw DomainError("c_integral_unitary: need Re lambda > 0");
  const double rho = pair.rho_d();
  const SmoothCutoff chi = make_cutoff(cutoff);

  // First half: chi(psi0(1, r, s)) has compact s-support.
  const double s_max0 = std::sqrt(cutoff.support_hi - 1.0) * (1 + 1e-12);
  auto first = [&](double s) {
    const Jet r = Jet::variable(0.0, k);
    const Jet psi1 = psi0_jet(1.0, r, s);
    if (chi.region(psi1.value().real()) == SmoothCutoff::Region::Zero) return Complex(0.0);
    return (psi1.pow(-0.5 * (lambda + rho)) * chi.eval(psi1)).derivative(k);
  };
  const Complex c_i = integrate_checked(first, 0.0, s_max0, quad);

  // Second half: (1-chi)(psi0(1,r,s)/psi0(0,r,s)) enters the plateau for
  // s^2 > 1/(hi - 1); the integrand has an integrable s^{Re lambda - 1}
  // endpoint.
  const double s_max_inf = (1 + 1e-12) / std::sqrt(cutoff.plateau_hi - 1.0);
  auto second = [&](double s) {
    const Jet r = Jet::variable(0.0, k);
    const Jet psi1 = psi0_jet(1.0, r, s);
    const Jet psi_zero = psi0_jet(0.0, r, s);
    const double ratio0 = psi1.value().real() / psi_zero.value().real();
    const auto region = chi.region(ratio0);
    if (region == SmoothCutoff::Region::One) return Complex(0.0);
    const Jet one_minus_chi = region == SmoothCutoff::Region::Zero
                                  ? Jet::constant(1.0, k, 0.0)
                                  : Complex(1.0) - chi.eval(psi1 / psi_zero);
    return (psi_zero.pow(0.5 * (lambda - rho)) * psi1.pow(-0.5 * (lambda + rho)) *
            one_minus_chi)
        .derivative(k);
  };
  const Complex c_ii = integrate_checked(second, 0.0, s_max_inf, quad);
  return {c_i, c_ii};
}

Complex c_integral_osp(const SymmetricPair& pair, Complex lambda, const CutoffSpec& cutoff,
                       const QuadratureSpec& quad) {
  if (pair.family() != Family::OrthoSymplectic)
    throw DomainError("c_integral_osp: orthosymplectic family only");
  if (!(lambda.real() > 0.0)) throw DomainError("c_integral_osp: need Re lambda > 0");
  const int m = pair.m_alpha();
  const double rho = pair.rho_d();

  if (m > 0) {
    // Classical chart integral, reduced to dimension (m|0).
    const double radial_norm = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
    auto integrand = [&](double r) {
      return std::pow(r, m - 1) * std::pow(Complex(1.0 + r * r), -(lambda + rho));
    };
    return radial_norm * integrate_exp_sinh_checked(integrand, quad);
  }

  const SmoothCutoff chi = make_cutoff(cutoff);

  if (m % 2 == 0) {
    // Point-derivative formula. The r^{lambda-rho} chart term contributes no
    // derivatives at r = 0 for Re lambda > 0 and is omitted.
    const int k = -m / 2; // = -rho
    const Jet r = Jet::variable(0.0, k);
    const Jet g = (Complex(1.0) + r).pow(-(lambda + rho)) * chi.eval(r + Complex(1.0));
    return minus_pi_pow(m / 2) * g.derivative(k);
  }

  // Odd m < 0: the pair of r^{-1/2}-weighted integrals; u = w^2 removes the
  // weight. k = 1/2 - rho.
  const int k = (1 - m) / 2;
  const double norm = minus_pi_pow((m - 1) / 2);
  const double w_max0 = std::sqrt(cutoff.support_hi - 1.0) * (1 + 1e-12);
  auto first = [&](double w) {
    const Jet r = Jet::variable(w * w, k);
    if (chi.region(1.0 + w * w) == SmoothCutoff::Region::Zero) return Complex(0.0);
    return 2.0 * ((Complex(1.0) + r).pow(-(lambda + rho)) * chi.eval(r + Complex(1.0)))
                     .derivative(k);
  };
  const Complex c_i = integrate_checked(first, 0.0, w_max0, quad);

  const double w_max_inf = (1 + 1e-12) / std::sqrt(cutoff.plateau_hi - 1.0);
  auto second = [&](double w) {
    const double u0 = w * w;
    const Jet r = Jet::variable(u0, k);
    const double ratio0 = (1.0 + u0) / u0;
    const auto region = chi.region(ratio0);
    if (region == SmoothCutoff::Region::One) return Complex(0.0);
    const Jet one_minus_chi = region == SmoothCutoff::Region::Zero
                                  ? Jet::constant(1.0, k, u0)
                                  : Complex(1.0) - chi.eval((Complex(1.0) + r) / r);
    return 2.0 * (r.pow(lambda - rho) * (Complex(1.0) + r).pow(-(lambda + rho)) *
                  one_minus_chi)
                     .derivative(k);
  };
  const Complex c_ii = integrate_checked(second, 0.0, w_max_inf, quad);
  return norm * (c_i + c_ii);
}

std::vector<double> default_limit_t_grid() { return {6.0, 8.0, 10.0, 12.0, 16.0, 20.0}; }

namespace {

// Neville extrapolation of (x_i, g_i) to x = 0.
LimitEstimate extrapolate_to_zero(const std::vector<double>& xs, std::vector<Complex> g) {
  const size_t n = xs.size();
  Complex prev = g[n - 1];
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = 0; i + j < n; ++i) {
      g[i] = (xs[i + j] * g[i] - xs[i] * g[i + 1]) / (xs[i + j] - xs[i]);
    }
  }
  LimitEstimate out;
  out.value = g[0];
  out.residual = std::abs(g[0] - prev);
  return out;
}

LimitEstimate limit_from_values(const std::vector<double>& ts,
                                const std::vector<Complex>& values) {
  std::vector<double> xs(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) xs[i] = std::exp(-2.0 * ts[i]);
  LimitEstimate est = extrapolate_to_zero(xs, values);
  // Convergence heuristic: raw values must stabilize toward the largest t.
  double last_diff = std::abs(values[values.size() - 1] - values[values.size() - 2]);
  double prev_diff = std::abs(values[values.size() - 2] - values[values.size() - 3]);
  const double scale = std::abs(est.value) + 1e-30;
  est.converged = last_diff <= prev_diff * 1.5 || last_diff <= 1e-9 * scale;
  return est;
}

} // namespace

LimitEstimate c_limit_oracle(const SymmetricPair& pair, Complex lambda,
                             std::span<const double> t_grid, const OracleOptions& opt) {
  if (!(lambda.real() > 0.0)) throw DomainError("c_limit_oracle: need Re lambda > 0");
  std::vector<double> ts(t_grid.begin(), t_grid.end());
  if (ts.empty()) ts = default_limit_t_grid();
  if (ts.size() < 3) throw DomainError("c_limit_oracle: need at least 3 grid points");
  std::vector<Complex> values;
  values.reserve(ts.size());
  for (double t : ts) values.push_back(phi_integral_split(pair, lambda, t, opt).sum());
  return limit_from_values(ts, values);
}

LimitEstimate c_limit_oracle_gl11(const GL11Param& param, std::span<const double> t_grid) {
  // Convergence requires c_minus >= 0 (the isotropic existence trichotomy).
  if (param.c_minus < 0.0)
    throw DomainError("c_limit_oracle_gl11: limit does not exist for c_minus < 0");
  std::vector<double> ts(t_grid.begin(), t_grid.end());
  if (ts.empty()) ts = default_limit_t_grid();
  if (ts.size() < 3) throw DomainError("c_limit_oracle: need at least 3 grid points");
  std::vector<Complex> values;
  values.reserve(ts.size());
  for (double t : ts) {
    const double a_plus = t * param.c_plus;
    const double a_minus = t * param.c_minus;
    const Complex lambda_minus_rho_h =
        param.mu * a_plus + param.nu * a_minus + 2.0 * a_minus;
    values.push_back(std::exp(-lambda_minus_rho_h) *
                     phi_integral_gl11(param, a_plus, a_minus));
  }
  return limit_from_values(ts, values);
}

} // namespace hcss
