#include "hcss/oracle.hpp"

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

double h_profile_unitary(double d, double ef) {
  const double arg = (1.0 - ef) * (1.0 - ef) - 4.0 * d * d;
  if (!(arg > 0.0)) throw DomainError("h_profile_unitary: nonpositive log argument");
  return 0.5 * std::log(arg);
}

double h_profile_osp(double normsq) {
  if (!(1.0 + normsq > 0.0)) throw DomainError("h_profile_osp: nonpositive log argument");
  return std::log(1.0 + normsq);
}

Jet h_profile_osp_jet(const Jet& normsq) { return (normsq + Complex(1.0)).log(); }

Jet psi0_jet(double c, const Jet& r, double s) {
  return (r + Complex(c)).pow_int(2) + Complex(s * s);
}

// ---------------------------------------------------------------------------
// Unitary family.
//
// Chart coordinates (s, y) with y in A^{2p|2q}; both integrands depend on y
// only through u = ||y||^2:
//   F0(u, s)  = psi(1, e^-t y, e^-2t s)^{(lambda-rho)/2}
//               * psi(1, y, s)^{-(lambda+rho)/2} * chi(psi(1, y, s))
//   Finf(u,s) = psi(e^-2t, y, s)^{(lambda-rho)/2}
//               * psi(1, y, s)^{-(lambda+rho)/2}
//               * (1-chi)(psi(1,y,s) / psi(0,y,s))
// with psi(c, y, s) = (c + ||y||^2)^2 + s^2. The y-integral localizes:
// m_alpha <= 0 becomes a d^{-m_alpha/2}/du at u = 0 under a 1-D s-integral,
// m_alpha > 0 a classical radial integral (the rank drops to (m_alpha|0)).
// ---------------------------------------------------------------------------

namespace {

struct UnitaryIntegrands {
  Complex lambda;
  double rho;
  double t;
  SmoothCutoff chi;

  Jet f0(const Jet& u, double s) const {
    const double e2t = std::exp(-2.0 * t);
    const double e4t = e2t * e2t;
    const Jet psi_base = (Complex(1.0) + u).pow_int(2) + Complex(s * s);
    if (chi.region(psi_base.value().real()) == SmoothCutoff::Region::Zero)
      return Jet::constant(0.0, u.order(), u.center());
    const Jet psi_scaled = (Complex(1.0) + e2t * u).pow_int(2) + Complex(e4t * s * s);
    return psi_scaled.pow(0.5 * (lambda - rho)) * psi_base.pow(-0.5 * (lambda + rho)) *
           chi.eval(psi_base);
  }

  Jet f_inf(const Jet& u, double s) const {
    const double e2t = std::exp(-2.0 * t);
    const Jet psi_base = (Complex(1.0) + u).pow_int(2) + Complex(s * s);
    const Jet psi_zero = u.pow_int(2) + Complex(s * s);
    const double ratio0 = psi_base.value().real() / psi_zero.value().real();
    const auto region = chi.region(ratio0);
    if (region == SmoothCutoff::Region::One) // chi = 1 there, so 1 - chi = 0
      return Jet::constant(0.0, u.order(), u.center());
    Jet one_minus_chi =
        region == SmoothCutoff::Region::Zero
            ? Jet::constant(1.0, u.order(), u.center())
            : Complex(1.0) - chi.eval(psi_base / psi_zero);
    const Jet psi_shift = (Complex(e2t) + u).pow_int(2) + Complex(s * s);
    return psi_shift.pow(0.5 * (lambda - rho)) * psi_base.pow(-0.5 * (lambda + rho)) *
           one_minus_chi;
  }
};

} // namespace

PhiSplit phi_integral_unitary_split(const SymmetricPair& pair, Complex lambda, double t,
                                    const OracleOptions& opt) {
  if (pair.family() != Family::Unitary)
    throw DomainError("phi_integral_unitary: unitary family only");
  if (!(t > 0.0)) throw DomainError("phi_integral_unitary: need t > 0");

  const int m = pair.m_alpha();
  const double rho = pair.rho_d();
  const UnitaryIntegrands F{lambda, rho, t, make_cutoff(opt.cutoff)};

  PhiSplit out;
  if (m <= 0) {
    const int k = -m / 2;
    const double norm = minus_pi_pow(-k);
    // chi(psi(1,y,s)) dies once 1 + s^2 leaves the cutoff support; the
    // (1-chi) ratio enters the plateau once s^2 > 1/(hi - 1). Both
    // s-integrands are even in s.
    const double s_max0 = std::sqrt(opt.cutoff.support_hi - 1.0) * (1.0 + 1e-12);
    auto f0 = [&](double s) { return norm * F.f0(Jet::variable(0.0, k), s).derivative(k); };
    out.i0 = 2.0 * integrate_checked(f0, 0.0, s_max0, opt.quad);

    const double s_max_inf = (1.0 + 1e-12) / std::sqrt(opt.cutoff.plateau_hi - 1.0);
    auto fi = [&](double s) { return norm * F.f_inf(Jet::variable(0.0, k), s).derivative(k); };
    out.i_inf = 2.0 * integrate_checked(fi, 0.0, s_max_inf, opt.quad);
    return out;
  }

  const double radial_norm = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
  const double b = opt.cutoff.support_hi;
  const double hi = opt.cutoff.plateau_hi;
  // Support boxes in (u, s): chi needs (1+u)^2 + s^2 <= b; the (1-chi)
  // factor needs (1+u)^2 + s^2 >= hi (u^2 + s^2).
  const double u_max0 = std::sqrt(b) - 1.0;
  const double s_max0 = std::sqrt(b - 1.0);
  const double u_max_inf = (1.0 + std::sqrt(hi)) / (hi - 1.0);
  const double s_max_inf = std::sqrt((1.0 + 2.0 * u_max_inf) / (hi - 1.0));

  auto outer0 = [&](double s) {
    auto inner = [&](double w) {
      return std::pow(w, m - 1) * F.f0(Jet::variable(w * w, 0), s).value();
    };
    return radial_norm *
           integrate_checked(inner, 0.0, std::sqrt(std::max(u_max0, 0.0)) * (1 + 1e-12),
                             opt.quad);
  };
  out.i0 = 2.0 * integrate_checked(outer0, 0.0, s_max0 * (1 + 1e-12), opt.quad);

  auto outer_inf = [&](double s) {
    auto inner = [&](double w) {
      return std::pow(w, m - 1) * F.f_inf(Jet::variable(w * w, 0), s).value();
    };
    return radial_norm *
           integrate_checked(inner, 0.0, std::sqrt(u_max_inf) * (1 + 1e-12), opt.quad);
  };
  out.i_inf = 2.0 * integrate_checked(outer_inf, 0.0, s_max_inf * (1 + 1e-12), opt.quad);
  return out;
}

Complex phi_integral_unitary(const SymmetricPair& pair, Complex lambda, double t,
                             const OracleOptions& opt) {
  const PhiSplit split = phi_integral_unitary_split(pair, lambda, t, opt);
  return std::exp(t * (lambda - pair.rho_d())) * split.sum();
}

// ---------------------------------------------------------------------------
// Orthosymplectic family. y lives in A^{p|2q}; integrands depend on
// u = ||y||^2 alone:
//   G0(u)   = (1 + e^-2t u)^{lambda-rho} (1+u)^{-(lambda+rho)} chi(1+u)
//   Ginf(u) = (e^-2t + u)^{lambda-rho} (1+u)^{-(lambda+rho)}
//             * (1-chi)((1+u)/u).
// For p = 0 there is no cutoff split: one exact Berezin integral.
// ---------------------------------------------------------------------------

namespace {

struct OspIntegrands {
  Complex lambda;
  double rho;
  double t;
  SmoothCutoff chi;

  Jet g0(const Jet& u, bool with_cutoff) const {
    const double e2t = std::exp(-2.0 * t);
    Jet v = (Complex(1.0) + e2t * u).pow(lambda - rho) *
            (Complex(1.0) + u).pow(-(lambda + rho));
    if (with_cutoff) {
      if (chi.region(1.0 + u.value().real()) == SmoothCutoff::Region::Zero)
        return Jet::constant(0.0, u.order(), u.center());
      v = v * chi.eval(u + Complex(1.0));
    }
    return v;
  }

  Jet g_inf(const Jet& u) const {
    const double e2t = std::exp(-2.0 * t);
    const double u0 = u.value().real();
    Jet v = (Complex(e2t) + u).pow(lambda - rho) * (Complex(1.0) + u).pow(-(lambda + rho));
    if (u0 == 0.0) return v; // (1-chi)((1+u)/u) is identically 1 near u = 0
    const auto region = chi.region((1.0 + u0) / u0);
    if (region == SmoothCutoff::Region::One)
      return Jet::constant(0.0, u.order(), u.center());
    if (region == SmoothCutoff::Region::Zero) return v;
    return v * (Complex(1.0) - chi.eval((Complex(1.0) + u) / u));
  }
};

} // namespace

PhiSplit phi_integral_osp_split(const SymmetricPair& pair, Complex lambda, double t,
                                const OracleOptions& opt) {
  if (pair.family() != Family::OrthoSymplectic)
    throw DomainError("phi_integral_osp: orthosymplectic family only");
  if (!(t > 0.0)) throw DomainError("phi_integral_osp: need t > 0");

  const int p = pair.p();
  const int q = pair.q();
  const int m = pair.m_alpha();
  const double rho = pair.rho_d();
  const OspIntegrands G{lambda, rho, t, make_cutoff(opt.cutoff)};

  PhiSplit out;
  if (p == 0) {
    // (-pi)^{-q} d^q/du^q at u = 0, no cutoff.
    const Jet u = Jet::variable(0.0, q);
    out.i0 = minus_pi_pow(-q) * G.g0(u, /*with_cutoff=*/false).derivative(q);
    return out;
  }

  if (m <= 0 && m % 2 == 0) {
    const int k = -m / 2;
    const Jet u = Jet::variable(0.0, k);
    out.i0 = minus_pi_pow(m / 2) * G.g0(u, true).derivative(k);
    out.i_inf = minus_pi_pow(m / 2) * G.g_inf(u).derivative(k);
    return out;
  }

  if (m > 0) {
    const double radial_norm = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
    const double r_max0 = std::sqrt(opt.cutoff.support_hi - 1.0) * (1 + 1e-12);
    auto f0 = [&](double r) {
      return std::pow(r, m - 1) * G.g0(Jet::variable(r * r, 0), true).value();
    };
    out.i0 = radial_norm * integrate_checked(f0, 0.0, r_max0, opt.quad);

    const double r_max_inf = (1 + 1e-12) / std::sqrt(opt.cutoff.plateau_hi - 1.0);
    auto fi = [&](double r) {
      return std::pow(r, m - 1) * G.g_inf(Jet::variable(r * r, 0)).value();
    };
    out.i_inf = radial_norm * integrate_checked(fi, 0.0, r_max_inf, opt.quad);
    return out;
  }

  // m < 0 odd: r^{-1/2}-weighted integrals of the k-th u-derivative,
  // k = (1-m)/2; substituting u = w^2 removes the endpoint weight.
  const int k = (1 - m) / 2;
  const double norm = minus_pi_pow((m - 1) / 2);
  const double w_max0 = std::sqrt(opt.cutoff.support_hi - 1.0) * (1 + 1e-12);
  auto f0 = [&](double w) { return 2.0 * G.g0(Jet::variable(w * w, k), true).derivative(k); };
  out.i0 = norm * integrate_checked(f0, 0.0, w_max0, opt.quad);

  const double w_max_inf = (1 + 1e-12) / std::sqrt(opt.cutoff.plateau_hi - 1.0);
  auto fi = [&](double w) { return 2.0 * G.g_inf(Jet::variable(w * w, k)).derivative(k); };
  out.i_inf = norm * integrate_checked(fi, 0.0, w_max_inf, opt.quad);
  return out;
}

Complex phi_integral_osp(const SymmetricPair& pair, Complex lambda, double t,
                         const OracleOptions& opt) {
  const PhiSplit split = phi_integral_osp_split(pair, lambda, t, opt);
  return std::exp(t * (lambda - pair.rho_d())) * split.sum();
}

PhiSplit phi_integral_split(const SymmetricPair& pair, Complex lambda, double t,
                            const OracleOptions& opt) {
  switch (pair.family()) {
    case Family::Unitary: return phi_integral_unitary_split(pair, lambda, t, opt);
    case Family::OrthoSymplectic: return phi_integral_osp_split(pair, lambda, t, opt);
    case Family::GL11:
      throw DomainError("phi_integral: use phi_integral_gl11 for the gl(1|1) pair");
  }
  throw DomainError("phi_integral: bad family");
}

Complex phi_integral(const SymmetricPair& pair, Complex lambda, double t,
                     const OracleOptions& opt) {
  return std::exp(t * (lambda - pair.rho_d())) * phi_integral_split(pair, lambda, t, opt).sum();
}

Complex phi_integral_gl11(const GL11Param& param, double a_plus, double a_minus) {
  const double alpha_h = 2.0 * a_minus;
  const Complex lambda_h = param.mu * a_plus + param.nu * a_minus;
  // (1 + mu/2 e^{-2 alpha(h)} xi1 xi2) (1 - mu/2 xi1 xi2) on the 0|2 chart.
  GrassmannElement lhs = GrassmannElement::scalar(2, 1.0);
  lhs.set_coefficient(0b11, 0.5 * param.mu * std::exp(-2.0 * alpha_h));
  GrassmannElement rhs = GrassmannElement::scalar(2, 1.0);
  rhs.set_coefficient(0b11, -0.5 * param.mu);
  const Complex top = (lhs * rhs).berezin_top();
  // rho = -alpha, so (lambda - rho)(h) = lambda(h) + alpha(h).
  return std::exp(lambda_h + alpha_h) * top;
}

} // namespace hcss
