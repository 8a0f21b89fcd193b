#include "hcss/hcseries.hpp"

#include <cmath>

#include "hcss/gammafn.hpp"

namespace hcss {

namespace {

// The recursion divides by l (l - lambda); lambda near a positive integer l
// is excluded whenever that division is actually performed. In the finite
// (terminating) case only l <= -rho is ever divided by: the tail vanishes
// through the zero factor (m + rho) of the closed product form, so larger
// integers are harmless. That keeps the terminating series usable at the
// integer spectral points where its closed forms are plainly defined.
void guard_series_lambda(const SymmetricPair& pair, Complex lambda) {
  const double re = lambda.real();
  const double n = std::round(re);
  if (n < 1.0 || std::abs(re - n) >= 1e-6 || std::abs(lambda.imag()) >= 1e-6) return;
  if (pair.finite_series() && n > static_cast<double>(-pair.rho().num)) return;
  throw DomainError("series: lambda within 1e-6 of a positive integer");
}

} // namespace

Complex gamma0(const SymmetricPair& pair, Complex lambda) {
  if (pair.family() == Family::Unitary) return c_formula(pair, lambda);
  if (pair.family() == Family::OrthoSymplectic) {
    const Rational rho = pair.rho();
    if (rho.is_integer() && rho.num <= 0) {
      // Finite case: Gamma(lambda)/Gamma(lambda+rho) = prod_{k=1}^{-rho}
      // (lambda - k), polynomial in lambda.
      Complex prod = 1.0;
      for (long k = 1; k <= -rho.num; ++k) prod *= lambda - static_cast<double>(k);
      return prod;
    }
    return c_gamma_quotient(pair, lambda);
  }
  throw DomainError("gamma0: anisotropic families only");
}

SeriesCoefficients gamma_coeffs(const SymmetricPair& pair, Complex lambda,
                                const SeriesOptions& opt) {
  if (!pair.anisotropic()) throw DomainError("gamma_coeffs: anisotropic families only");
  guard_series_lambda(pair, lambda);
  if (!(opt.t > 0.0)) throw DomainError("gamma_coeffs: need t > 0");

  const double ma = pair.m_alpha();
  const double rho = pair.rho_d();
  const double x = std::exp(-2.0 * opt.t);

  SeriesCoefficients out{pair, lambda, {}, TruncationReason::TailBound};
  out.gamma.push_back(gamma0(pair, lambda));

  // Finite case: run the recursion through -rho + 2 so the terminating
  // zeros are produced by the recursion itself. Past ell = -rho the
  // numerator vanishes identically (zero factor of the closed product
  // form), so an integer lambda there makes the step 0/0; the value is 0.
  if (pair.finite_series()) {
    const long last = -pair.rho().num + 2;
    for (int ell = 1; ell <= last; ++ell) {
      const Complex gm1 = out.gamma[static_cast<size_t>(ell - 1)];
      const Complex gm2 = ell >= 2 ? out.gamma[static_cast<size_t>(ell - 2)] : Complex(0.0);
      const Complex rhs =
          0.5 * ma * (rho - lambda + 2.0 * (ell - 1.0)) * gm1 +
          (rho - lambda + static_cast<double>(ell) - 2.0) *
              (rho + static_cast<double>(ell) - 2.0) * gm2;
      const Complex denom = static_cast<double>(ell) * (static_cast<double>(ell) - lambda);
      if (ell > -pair.rho().num && std::abs(denom) < 1e-6 * ell)
        out.gamma.push_back(Complex(0.0));
      else
        out.gamma.push_back(rhs / denom);
    }
    out.reason = TruncationReason::ExactTermination;
    return out;
  }

  Complex partial = out.gamma[0];
  double xl = 1.0;
  int consecutive_small = 0;
  for (int ell = 1; ell <= opt.cap; ++ell) {
    const Complex gm1 = out.gamma[static_cast<size_t>(ell - 1)];
    const Complex gm2 = ell >= 2 ? out.gamma[static_cast<size_t>(ell - 2)] : Complex(0.0);
    const Complex rhs = 0.5 * ma * (rho - lambda + 2.0 * (ell - 1.0)) * gm1 +
                        (rho - lambda + static_cast<double>(ell) - 2.0) *
                            (rho + static_cast<double>(ell) - 2.0) * gm2;
    const Complex g = rhs / (static_cast<double>(ell) * (static_cast<double>(ell) - lambda));
    out.gamma.push_back(g);

    xl *= x;
    const Complex term = g * xl;
    partial += term;
    if (std::abs(term) < opt.tol * std::abs(partial))
      ++consecutive_small;
    else
      consecutive_small = 0;
    if (ell >= opt.min_terms && consecutive_small >= 5) {
      out.reason = TruncationReason::TailBound;
      return out;
    }
  }
  out.reason = TruncationReason::Cap;
  return out;
}

double recursion_residual(const SeriesCoefficients& coeffs, int ell) {
  if (ell < 0 || ell > coeffs.max_ell())
    throw DomainError("recursion_residual: ell out of range");
  const double ma = coeffs.pair.m_alpha();
  const double rho = coeffs.pair.rho_d();
  const Complex lambda = coeffs.lambda;
  auto g = [&](int k) {
    return k < 0 ? Complex(0.0) : coeffs.gamma[static_cast<size_t>(k)];
  };
  const Complex lhs = static_cast<double>(ell) * (static_cast<double>(ell) - lambda) * g(ell);
  const Complex rhs1 = 0.5 * ma * (rho - lambda + 2.0 * (ell - 1.0)) * g(ell - 1);
  const Complex rhs2 = (rho - lambda + static_cast<double>(ell) - 2.0) * (rho + static_cast<double>(ell) - 2.0) * g(ell - 2);
  const double scale = std::abs(lhs) + std::abs(rhs1) + std::abs(rhs2) + std::abs(g(0));
  return std::abs(lhs - rhs1 - rhs2) / scale;
}

double recursion_residual_max(const SeriesCoefficients& coeffs) {
  double worst = 0.0;
  for (int ell = 0; ell <= coeffs.max_ell(); ++ell)
    worst = std::max(worst, recursion_residual(coeffs, ell));
  return worst;
}

Complex gamma_closed_osp(const SymmetricPair& pair, Complex lambda, int ell) {
  if (pair.family() != Family::OrthoSymplectic)
    throw DomainError("gamma_closed_osp: m_2alpha = 0 (orthosymplectic) only");
  guard_series_lambda(pair, lambda);
  if (ell < 0) throw DomainError("gamma_closed_osp: negative ell");
  const double rho = pair.rho_d();
  Complex g = gamma0(pair, lambda);
  for (int m = 0; m < ell && g != Complex(0.0); ++m) {
    g *= (m + rho) * (m + rho - lambda) / ((m + 1.0) * (m + 1.0 - lambda));
  }
  return g;
}

double gangolli_fitted_constant(const SeriesCoefficients& coeffs, double t, int ell0) {
  double k = 0.0;
  const int top = std::min(ell0, coeffs.max_ell());
  for (int ell = 0; ell <= top; ++ell)
    k = std::max(k, std::abs(coeffs.gamma[static_cast<size_t>(ell)]) * std::exp(-ell * t));
  return k;
}

bool gangolli_bound_holds(const SeriesCoefficients& coeffs, double t, int ell0) {
  const double k = gangolli_fitted_constant(coeffs, t, ell0) * (1.0 + 1e-12);
  for (int ell = 0; ell <= coeffs.max_ell(); ++ell) {
    if (std::abs(coeffs.gamma[static_cast<size_t>(ell)]) > k * std::exp(ell * t)) return false;
  }
  return true;
}

Complex phi_series(const SymmetricPair& pair, Complex lambda, double t, double tol) {
  if (!(t >= 0.05)) throw DomainError("phi_series: need t >= 0.05");
  SeriesOptions opt;
  opt.tol = tol;
  opt.t = t;
  const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda, opt);
  if (coeffs.reason == TruncationReason::Cap) {
    // The fitted Gangolli constant turns the geometric tail into an a
    // posteriori bound; reject if it is not under control at this t.
    const double k = gangolli_fitted_constant(coeffs, t, coeffs.max_ell());
    const double tail = k * std::exp(-(coeffs.max_ell() + 1) * t) / (1.0 - std::exp(-t));
    Complex partial = 0.0;
    double xl = 1.0;
    const double x = std::exp(-2.0 * t);
    for (const Complex& g : coeffs.gamma) {
      partial += g * xl;
      xl *= x;
    }
    if (tail > tol * std::abs(partial) * 10.0)
      throw ConvergenceError("phi_series: cap reached without tail control");
  }
  Complex sum = 0.0;
  const double x = std::exp(-2.0 * t);
  double xl = 1.0;
  for (const Complex& g : coeffs.gamma) {
    sum += g * xl;
    xl *= x;
  }
  return std::exp(t * (lambda - pair.rho_d())) * sum;
}

// The Weyl sum. The identity phi = sum of Phi_{w lambda} holds away from
// (1/2) Z; numerically only the integer points of that set degenerate (the
// recursion divides there), and those are refused by the series guard. Half-
// odd lambdas evaluate fine and are left to the caller's judgement.
Complex phi_spherical(const SymmetricPair& pair, Complex lambda, double t) {
  if (!pair.anisotropic()) throw DomainError("phi_spherical: anisotropic families only");
  if (!(lambda.real() > 0.0)) throw DomainError("phi_spherical: need Re lambda > 0");
  if (!(t > 0.0)) throw DomainError("phi_spherical: need t > 0");
  Complex value = phi_series(pair, lambda, t);
  if (pair.weyl_order() == 2) value += phi_series(pair, -lambda, t);
  return value;
}

Complex jacobi_polynomial(int n, Complex a, Complex b, Complex x) {
  if (n < 0) throw DomainError("jacobi_polynomial: negative degree");
  // P_n^{(a,b)}(x) = 1/n! sum_l C(n,l) [prod_{j=l}^{n-1} (a+1+j)]
  //                  [prod_{j=0}^{l-1} (a+b+n+1+j)] ((x-1)/2)^l,
  // the Gamma-ratio coefficients written as plain products.
  const Complex half_shift = 0.5 * (x - 1.0);
  double nfac = 1.0;
  for (int i = 2; i <= n; ++i) nfac *= i;
  Complex sum = 0.0;
  for (int l = 0; l <= n; ++l) {
    Complex coeff = binomial(Complex(static_cast<double>(n)), l);
    for (int j = l; j < n; ++j) coeff *= a + 1.0 + static_cast<double>(j);
    for (int j = 0; j < l; ++j) coeff *= a + b + static_cast<double>(n) + 1.0 + static_cast<double>(j);
    Complex pw = 1.0;
    for (int i = 0; i < l; ++i) pw *= half_shift;
    sum += coeff * pw;
  }
  return sum / nfac;
}

Complex phi_jacobi(const SymmetricPair& pair, Complex lambda, double t) {
  if (!pair.finite_series())
    throw DomainError("phi_jacobi: needs orthosymplectic with even m_alpha <= 0");
  const int n = static_cast<int>(-pair.rho().num);
  const double rho = pair.rho_d();
  const Complex x = 1.0 - 2.0 * std::exp(-2.0 * t);
  return std::exp(t * (lambda - rho)) *
         jacobi_polynomial(n, -lambda, 2.0 * rho - 1.0, x);
}

Complex phi_osp_p0(int q, Complex lambda, double t) {
  if (q < 1) throw DomainError("phi_osp_p0: need q >= 1");
  // rho = -q.
  Complex sum = 0.0;
  for (int k = 0; k <= q; ++k) {
    sum += binomial(lambda + static_cast<double>(q), k) *
           binomial(static_cast<double>(q) - lambda, q - k) *
           std::exp(static_cast<double>(q - 2 * k) * t);
  }
  return std::exp(lambda * t) * sum;
}

Complex phi_gl11(const GL11Param& param, double a_plus, double a_minus) {
  const Complex lambda_h = param.mu * a_plus + param.nu * a_minus;
  return -param.mu * std::exp(lambda_h) * std::sinh(2.0 * a_minus);
}

} // namespace hcss
