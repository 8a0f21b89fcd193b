#include "hcss/checks.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hcss/cfunc.hpp"
#include "hcss/gammafn.hpp"
#include "hcss/hcseries.hpp"
#include "hcss/oracle.hpp"
#include "hcss/radialode.hpp"
#include "hcss/runconfig.hpp"

namespace hcss {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / (std::abs(want) + 1e-300);
}

CheckResult bounded(std::string name, double observed, double bound, std::string note = "") {
  return CheckResult{std::move(name), observed <= bound, observed, bound, std::move(note)};
}

// One-constant fit of `values` against `targets` at index `ref`, then the
// worst relative mismatch over the rest.
double fitted_max_rel_err(const std::vector<Complex>& values,
                          const std::vector<Complex>& targets, size_t ref) {
  const Complex fit = targets[ref] / values[ref];
  double worst = 0.0;
  for (size_t i = 0; i < values.size(); ++i)
    worst = std::max(worst, rel_err(fit * values[i], targets[i]));
  return worst;
}

std::vector<CheckResult> suite_localization() {
  std::vector<CheckResult> out;

  double worst_gauss = 0.0;
  double worst_localize = 0.0;
  const RadialProfile gauss = gaussian_profile();
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 3; ++q) {
      const double want = std::pow(kPi, 0.5 * (p - 2 * q));
      worst_gauss = std::max(worst_gauss, std::abs(radial_integral(p, q, gauss) - want));
      worst_localize = std::max(worst_localize, std::abs(localize(p, q, gauss) - want));
    }
  }
  out.push_back(bounded("gaussian radial_integral = pi^((p-2q)/2), p<=5 q<=3", worst_gauss, 1e-10));
  out.push_back(bounded("gaussian localize = pi^((p-2q)/2), p<=5 q<=3", worst_localize, 1e-10));

  double worst_shift = 0.0;
  for (unsigned seed = 1; seed <= 6; ++seed) {
    const RadialProfile profile = random_bump_profile(seed);
    for (int p = 0; p <= 5; ++p) {
      for (int q = 0; q <= 3; ++q) {
        const Complex base = localize(p, q, profile);
        for (int k = 1; 2 * k <= p && k <= q; ++k) {
          auto [pr, qr] = reduce_dims(p, q, k);
          const Complex reduced = localize(pr, qr, profile);
          worst_shift =
              std::max(worst_shift, std::abs(base - reduced) / (1.0 + std::abs(base)));
        }
      }
    }
  }
  out.push_back(bounded("dimension shift localize(p,q) = localize(p-2k,q-k)", worst_shift, 1e-8));

  // d^{2q}/dr^{2q} f(0) = (2q)!/q! d^q/du^q f(sqrt u)|_0 on even profiles.
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double worst_faa = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> a(4);
    for (auto& c : a) c = unif(rng);
    RadialProfile poly{[a](double r, int order) {
                         Jet u = Jet::variable(r, order).pow_int(2);
                         Jet acc = Jet::constant(a[3], order, r);
                         for (int j = 2; j >= 0; --j) acc = acc * u + Complex(a[static_cast<size_t>(j)]);
                         return acc;
                       },
                       "even polynomial"};
    for (int q = 1; q <= 3; ++q) {
      const Complex lhs = poly.eval(0.0, 2 * q).derivative(2 * q);
      double fac = 1.0;
      for (int i = q + 1; i <= 2 * q; ++i) fac *= i; // (2q)!/q!
      const Complex rhs = fac * even_profile_jet(poly, q).derivative(q);
      worst_faa = std::max(worst_faa, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
  }
  out.push_back(bounded("Faa di Bruno consistency of even-profile jets", worst_faa, 1e-12));
  return out;
}

std::vector<CheckResult> suite_cfunc() {
  std::vector<CheckResult> out;

  // Duplication formula residual on a pole-free grid.
  double worst_dup = 0.0;
  for (double re = -3.3; re <= 4.0; re += 0.7) {
    for (double im : {0.0, 0.6, -1.2}) {
      const Complex z(re, im);
      if (near_gamma_pole(z, 1e-3) || near_gamma_pole(0.5 * z, 1e-3) ||
          near_gamma_pole(0.5 * (z + 1.0), 1e-3))
        continue;
      const Complex lhs = complex_gamma(z);
      const Complex rhs = std::pow(Complex(2.0), z - 1.0) / std::sqrt(kPi) *
                          complex_gamma(0.5 * z) * complex_gamma(0.5 * (z + 1.0));
      worst_dup = std::max(worst_dup, rel_err(lhs, rhs));
    }
  }
  out.push_back(bounded("duplication formula residual", worst_dup, 1e-10));

  const std::vector<Complex> grid = {Complex(1.3), Complex(2.1), Complex(2.7, 0.4),
                                     Complex(0.7, 0.4)};

  // Unitary m_alpha <= 0: cutoff-free integral vs Gamma formula (one fit).
  for (auto [p, q] : {std::pair{0, 1}, {1, 1}, {0, 2}}) {
    const SymmetricPair pair = SymmetricPair::make(Family::Unitary, p, q);
    std::vector<Complex> values, targets;
    values.push_back(c_integral_unitary(pair, fit_reference_lambda(pair)));
    targets.push_back(c_formula(pair, fit_reference_lambda(pair)));
    for (Complex lambda : grid) {
      values.push_back(c_integral_unitary(pair, lambda));
      targets.push_back(c_formula(pair, lambda));
    }
    out.push_back(bounded("c integral vs formula, " + pair.spec_string(),
                          fitted_max_rel_err(values, targets, 0), 1e-6));
  }

  // Orthosymplectic: chart integral vs Gamma(lambda)/Gamma(lambda+rho).
  for (auto [p, q] : {std::pair{3, 0}, {2, 1}, {1, 1}, {0, 1}, {0, 2}}) {
    const SymmetricPair pair = SymmetricPair::make(Family::OrthoSymplectic, p, q);
    std::vector<Complex> values, targets;
    values.push_back(c_integral_osp(pair, fit_reference_lambda(pair)));
    targets.push_back(c_gamma_quotient(pair, fit_reference_lambda(pair)));
    for (Complex lambda : grid) {
      values.push_back(c_integral_osp(pair, lambda));
      targets.push_back(c_gamma_quotient(pair, lambda));
    }
    out.push_back(bounded("osp c integral vs Gamma quotient, " + pair.spec_string(),
                          fitted_max_rel_err(values, targets, 0), 1e-6));
  }

  // The Gindikin-Karpelevic quotient rewritten by duplication is a constant
  // multiple of Gamma(lambda)/Gamma(lambda+rho) on the osp family.
  for (auto [p, q] : {std::pair{3, 0}, {2, 1}, {1, 1}, {0, 2}}) {
    const SymmetricPair pair = SymmetricPair::make(Family::OrthoSymplectic, p, q);
    std::vector<Complex> ratios;
    for (int i = 0; i < 10; ++i) {
      const Complex lambda(0.9 + 0.37 * i, 0.2);
      ratios.push_back(c_formula(pair, lambda) / c_gamma_quotient(pair, lambda));
    }
    Complex mean = 0.0;
    for (Complex r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double var = 0.0;
    for (Complex r : ratios) var = std::max(var, std::abs(r - mean) / std::abs(mean));
    out.push_back(bounded("duplication ratio constancy, " + pair.spec_string(), var, 1e-10));
  }

  // Right-half-plane zeros of c for the purely odd unitary pairs.
  double worst_zero = 0.0;
  for (int q : {2, 3}) {
    const SymmetricPair pair = SymmetricPair::make(Family::Unitary, 0, q);
    for (int k = 1; 1 + q - 2 * k > 0; ++k) {
      const Complex zero_at(static_cast<double>(1 + q - 2 * k));
      worst_zero = std::max(worst_zero, std::abs(c_formula(pair, zero_at)));
    }
  }
  out.push_back(bounded("c zeros at lambda = 1 - m_a/2 - 2k (unitary p=0)", worst_zero, 1e-8));
  return out;
}

std::vector<CheckResult> suite_series() {
  std::vector<CheckResult> out;
  const std::vector<SymmetricPair> pairs = {
      SymmetricPair::make(Family::Unitary, 1, 0), SymmetricPair::make(Family::Unitary, 0, 1),
      SymmetricPair::make(Family::Unitary, 1, 1),
      SymmetricPair::make(Family::OrthoSymplectic, 2, 1),
      SymmetricPair::make(Family::OrthoSymplectic, 1, 1),
      SymmetricPair::make(Family::OrthoSymplectic, 0, 2)};

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto random_lambda = [&]() {
    while (true) {
      const Complex lambda(0.6 + 3.0 * unif(rng), 0.5 * unif(rng));
      const double two_re = 2.0 * lambda.real();
      if (std::abs(two_re - std::round(two_re)) > 0.05 || std::abs(lambda.imag()) > 0.05)
        return lambda;
    }
  };

  double worst_resid = 0.0;
  double worst_gangolli_failures = 0.0;
  for (const auto& pair : pairs) {
    for (int i = 0; i < 20; ++i) {
      const Complex lambda = random_lambda();
      SeriesOptions opt;
      opt.t = 0.4;
      const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda, opt);
      worst_resid = std::max(worst_resid, recursion_residual_max(coeffs));
      for (double t : {0.4, 1.0})
        if (!gangolli_bound_holds(coeffs, t, std::min(10, coeffs.max_ell())))
          worst_gangolli_failures += 1.0;
    }
  }
  out.push_back(bounded("recursion certificate residual", worst_resid, 1e-12));
  out.push_back(bounded("Gangolli bound with fitted constant", worst_gangolli_failures, 0.0));

  double worst_closed = 0.0;
  for (auto [p, q] : {std::pair{2, 1}, {1, 1}, {0, 2}, {1, 2}}) {
    const SymmetricPair pair = SymmetricPair::make(Family::OrthoSymplectic, p, q);
    for (int i = 0; i < 5; ++i) {
      const Complex lambda = random_lambda();
      SeriesOptions opt;
      opt.t = 0.4;
      opt.min_terms = 12;
      const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda, opt);
      for (int ell = 0; ell <= std::min(10, coeffs.max_ell()); ++ell) {
        const Complex closed = gamma_closed_osp(pair, lambda, ell);
        const double scale = std::abs(coeffs.gamma[0]) + std::abs(coeffs.gamma[static_cast<size_t>(ell)]);
        worst_closed = std::max(
            worst_closed, std::abs(closed - coeffs.gamma[static_cast<size_t>(ell)]) / scale);
      }
    }
  }
  out.push_back(bounded("closed osp coefficients vs recursion", worst_closed, 1e-12));

  // Series vs integral oracle at a few points, one fitted constant per pair.
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 0, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 1)}) {
    std::vector<Complex> values, targets;
    const Complex lambda(1.3, 0.0);
    for (double t : {1.0, 0.5, 2.0}) {
      values.push_back(phi_integral(pair, lambda, t));
      targets.push_back(phi_spherical(pair, lambda, t));
    }
    out.push_back(bounded("phi series vs oracle, " + pair.spec_string(),
                          fitted_max_rel_err(values, targets, 0), 1e-5));
  }
  return out;
}

std::vector<CheckResult> suite_jacobi() {
  std::vector<CheckResult> out;
  for (auto [p, q] : {std::pair{0, 1}, {0, 2}, {2, 2}}) {
    const SymmetricPair pair = SymmetricPair::make(Family::OrthoSymplectic, p, q);
    const int n = static_cast<int>(-pair.rho().num);

    double worst_zero = 0.0;
    double worst_ratio = 0.0;
    Complex ratio_ref = 0.0;
    bool first = true;
    for (Complex lambda : {Complex(2.3), Complex(3.7)}) {
      const SeriesCoefficients coeffs = gamma_coeffs(pair, lambda);
      for (int ell = n + 1; ell <= coeffs.max_ell(); ++ell)
        worst_zero = std::max(worst_zero, std::abs(coeffs.gamma[static_cast<size_t>(ell)]) /
                                              std::abs(coeffs.gamma[0]));
      for (double t : {0.5, 1.0, 2.0}) {
        const Complex ratio = phi_series(pair, lambda, t) / phi_jacobi(pair, lambda, t);
        if (first) {
          ratio_ref = ratio;
          first = false;
        }
        worst_ratio = std::max(worst_ratio, std::abs(ratio - ratio_ref) / std::abs(ratio_ref));
      }
    }
    out.push_back(bounded("finite termination, " + pair.spec_string(), worst_zero, 1e-12));
    out.push_back(bounded("series/jacobi ratio constancy, " + pair.spec_string(), worst_ratio,
                          1e-12, "ratio " + format_complex(ratio_ref)));
  }
  return out;
}

std::vector<CheckResult> suite_gl11() {
  std::vector<CheckResult> out;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  double worst = 0.0;
  double scale_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GL11Param par = make_gl11_param(Complex(unif(rng), unif(rng)),
                                          Complex(unif(rng), unif(rng)), unif(rng), 1.0);
    const double a_plus = unif(rng);
    const double a_minus = unif(rng);
    const Complex closed = phi_gl11(par, a_plus, a_minus);
    const Complex integral = phi_integral_gl11(par, a_plus, a_minus);
    worst = std::max(worst, std::abs(closed - integral));
    scale_worst = std::max(scale_worst, std::abs(closed));
  }
  out.push_back(bounded("phi closed vs Berezin integral (100 draws)", worst, 1e-14 * std::max(1.0, scale_worst)));

  const GL11Param zero_dir = make_gl11_param(Complex(7.0), Complex(0.3), 1.0, 0.0);
  const GL11Param pos_dir = make_gl11_param(Complex(2.0), Complex(0.3), 0.2, 1.0);
  const GL11Param neg_dir = make_gl11_param(Complex(2.0), Complex(0.3), 0.2, -1.0);
  const bool trichotomy = c_gl11(zero_dir).exists && c_gl11(zero_dir).value == Complex(0.0) &&
                          c_gl11(pos_dir).exists &&
                          c_gl11(pos_dir).value == Complex(-1.0) && !c_gl11(neg_dir).exists;
  out.push_back(CheckResult{"c existence trichotomy", trichotomy, trichotomy ? 0.0 : 1.0, 0.0, ""});

  double worst_inv = 0.0;
  for (int i = 0; i < 50; ++i) {
    GL11Param par = make_gl11_param(Complex(unif(rng), unif(rng)),
                                    Complex(unif(rng), unif(rng)), unif(rng), 1.0);
    const double a_plus = unif(rng);
    const double a_minus = unif(rng);
    GL11Param neg = par;
    neg.mu = -neg.mu;
    neg.nu = -neg.nu;
    worst_inv = std::max(worst_inv, std::abs(phi_integral_gl11(par, -a_plus, -a_minus) -
                                             phi_integral_gl11(neg, a_plus, a_minus)));
  }
  out.push_back(bounded("inversion phi(lambda, -h) = phi(-lambda, h)", worst_inv, 1e-14));
  return out;
}

std::vector<CheckResult> suite_ode() {
  std::vector<CheckResult> out;
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double ts[] = {0.7, 1.0, 1.5};
  for (Family family : {Family::Unitary, Family::OrthoSymplectic}) {
    double worst = 0.0;
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 1; ++q) {
        const SymmetricPair pair = SymmetricPair::make(family, p, q);
        for (int i = 0; i < 2; ++i) {
          Complex lambda(0.7 + 2.0 * unif(rng), 0.3 * unif(rng));
          while (std::abs(2.0 * lambda.real() - std::round(2.0 * lambda.real())) < 0.05)
            lambda += Complex(0.07, 0.0);
          worst = std::max(worst, eigen_residual(pair, lambda, PhiMethod::Series, ts));
        }
      }
    }
    out.push_back(bounded(std::string("eigenfunction residual (series), ") +
                              (family == Family::Unitary ? "unitary" : "osp"),
                          worst, 1e-5));
  }
  return out;
}

std::vector<CheckResult> suite_symmetry() {
  std::vector<CheckResult> out;
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 0, 1),
        SymmetricPair::make(Family::Unitary, 1, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 2, 1)}) {
    double worst = 0.0;
    for (Complex lambda : {Complex(0.3), Complex(0.3, 0.2)}) {
      const Complex plus = phi_integral(pair, lambda, 1.0);
      const Complex minus = phi_integral(pair, -lambda, 1.0);
      worst = std::max(worst, rel_err(plus, minus));
    }
    out.push_back(bounded("oracle Weyl symmetry, " + pair.spec_string(), worst, 1e-4));
  }

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double worst_gl = 0.0;
  for (int i = 0; i < 25; ++i) {
    GL11Param par = make_gl11_param(Complex(unif(rng), unif(rng)),
                                    Complex(unif(rng), unif(rng)), unif(rng), 1.0);
    GL11Param neg = par;
    neg.mu = -neg.mu;
    neg.nu = -neg.nu;
    const double a_plus = unif(rng), a_minus = unif(rng);
    worst_gl = std::max(worst_gl, std::abs(phi_integral_gl11(par, -a_plus, -a_minus) -
                                           phi_integral_gl11(neg, a_plus, a_minus)));
  }
  out.push_back(bounded("gl(1|1) inversion symmetry", worst_gl, 1e-14));
  return out;
}

std::vector<CheckResult> suite_cutoff() {
  std::vector<CheckResult> out;
  const CutoffSpec narrow{};
  const CutoffSpec wide = wide_cutoff_spec();

  // Oracle chart sums are cutoff independent; the halves are not.
  for (const auto& pair :
       {SymmetricPair::make(Family::Unitary, 0, 1),
        SymmetricPair::make(Family::OrthoSymplectic, 1, 1)}) {
    OracleOptions a, b;
    a.cutoff = narrow;
    b.cutoff = wide;
    const Complex lambda(1.5, 0.3);
    const PhiSplit sa = phi_integral_split(pair, lambda, 1.0, a);
    const PhiSplit sb = phi_integral_split(pair, lambda, 1.0, b);
    out.push_back(bounded("chart-sum cutoff independence, " + pair.spec_string(),
                          rel_err(sa.sum(), sb.sum()), 1e-6));
    const double half_shift = std::abs(sa.i0 - sb.i0) / (std::abs(sa.sum()) + 1e-300);
    out.push_back(CheckResult{"individual chart integral moves, " + pair.spec_string(),
                              half_shift > 1e3 * rel_err(sa.sum(), sb.sum()), half_shift, 0.0,
                              "halves shift while the sum stays"});
  }

  // Lem-style split for the unitary c-integral.
  {
    const SymmetricPair pair = SymmetricPair::make(Family::Unitary, 0, 1);
    const Complex lambda(1.5, 0.0);
    const auto [a1, a2] = c_integral_unitary_split(pair, lambda, narrow);
    const auto [b1, b2] = c_integral_unitary_split(pair, lambda, wide);
    out.push_back(bounded("c chi-split cancellation, " + pair.spec_string(),
                          rel_err(a1 + a2, b1 + b2), 1e-6));
  }

  // Odd orthosymplectic c-integral under both cutoffs.
  {
    const SymmetricPair pair = SymmetricPair::make(Family::OrthoSymplectic, 1, 1);
    const Complex lambda(1.7, 0.0);
    const Complex ca = c_integral_osp(pair, lambda, narrow);
    const Complex cb = c_integral_osp(pair, lambda, wide);
    out.push_back(bounded("osp c-integral cutoff independence, " + pair.spec_string(),
                          rel_err(ca, cb), 1e-6));
  }
  return out;
}

} // namespace

RadialProfile random_bump_profile(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double c0 = unif(rng) + (unif(rng) > 0 ? 1.5 : -1.5);
  const double c1 = unif(rng);
  const double c2 = unif(rng);
  const double edge = 1.0 + 0.5 * (unif(rng) + 1.0);      // plateau end in u
  const double support = edge + 0.75 + 0.25 * (unif(rng) + 1.0);
  const SmoothCutoff bump = SmoothCutoff::upper(edge, support);
  return RadialProfile{
      [c0, c1, c2, bump](double r, int order) {
        const Jet u = Jet::variable(r, order).pow_int(2);
        const Jet poly = (u * Complex(c2) + Complex(c1)) * u + Complex(c0);
        return poly * bump.eval(u);
      },
      "bump polynomial seed " + std::to_string(seed)};
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"localization", "cfunc", "series", "jacobi",
                                                 "gl11", "ode", "symmetry", "cutoff"};
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& name) {
  if (name == "localization") return suite_localization();
  if (name == "cfunc") return suite_cfunc();
  if (name == "series") return suite_series();
  if (name == "jacobi") return suite_jacobi();
  if (name == "gl11") return suite_gl11();
  if (name == "ode") return suite_ode();
  if (name == "symmetry") return suite_symmetry();
  if (name == "cutoff") return suite_cutoff();
  throw ParseError("verify: unknown suite '" + name + "'");
}

} // namespace hcss
