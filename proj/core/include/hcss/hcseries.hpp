#pragma once

#include <vector>

#include "hcss/cfunc.hpp"
#include "hcss/rootdata.hpp"

namespace hcss {

// gamma_0(lambda): the series seed, chosen as the family's natural
// normalization of c(lambda) with unit constant. Unitary pairs use the
// Gindikin-Karpelevic quotient; orthosymplectic pairs use
// Gamma(lambda)/Gamma(lambda+rho), whose finite-case product form
// prod_{k=1}^{-rho} (lambda - k) keeps the frozen low-order coefficients
// rational.
Complex gamma0(const SymmetricPair& pair, Complex lambda);

enum class TruncationReason { TailBound, ExactTermination, Cap };

struct SeriesCoefficients {
  SymmetricPair pair;
  Complex lambda;
  std::vector<Complex> gamma;
  TruncationReason reason = TruncationReason::TailBound;

  int max_ell() const { return static_cast<int>(gamma.size()) - 1; }
};

struct SeriesOptions {
  double tol = 1e-12;  // target relative tail at the evaluation point
  double t = 1.0;      // evaluation point the tail is controlled at
  int cap = 500;
  int min_terms = 8;
};

// Two-term coefficient recursion
//   l (l - lambda) g_l = m_a/2 (rho - lambda + 2(l-1)) g_{l-1}
//                      + (rho - lambda + l - 2)(rho + l - 2) g_{l-2},
// seeded by gamma0. lambda must stay 1e-6 away from the positive integers.
SeriesCoefficients gamma_coeffs(const SymmetricPair& pair, Complex lambda,
                                const SeriesOptions& opt = {});

// | l(l-lambda) g_l - rhs |, normalized by the magnitude of the terms.
double recursion_residual(const SeriesCoefficients& coeffs, int ell);
double recursion_residual_max(const SeriesCoefficients& coeffs);

// Closed product form of the coefficients when m_2alpha = 0:
//   g_l = g_0 prod_{m=0}^{l-1} (m+rho)(m+rho-lambda) / ((m+1)(m+1-lambda)).
Complex gamma_closed_osp(const SymmetricPair& pair, Complex lambda, int ell);

// Smallest K with |g_l| <= K e^{l t} over l <= ell0 (the fitted Gangolli
// constant), and the check that the bound then holds for every computed l.
double gangolli_fitted_constant(const SeriesCoefficients& coeffs, double t, int ell0);
bool gangolli_bound_holds(const SeriesCoefficients& coeffs, double t, int ell0);

// Phi_lambda(e^{t h0}) = e^{(lambda-rho) t} sum_l g_l e^{-2 l t}.
Complex phi_series(const SymmetricPair& pair, Complex lambda, double t, double tol = 1e-12);

// phi_lambda = sum over the Weyl group: Phi_lambda + Phi_{-lambda} when the
// Weyl order is 2, else Phi_lambda. Requires Re lambda > 0 and lambda at
// least 1e-6 away from (1/2) Z.
Complex phi_spherical(const SymmetricPair& pair, Complex lambda, double t);

// Jacobi polynomial P_n^{(a,b)}(x) through its explicit finite sum with
// product-form (pole-free) coefficients.
Complex jacobi_polynomial(int n, Complex a, Complex b, Complex x);

// Finite orthosymplectic case (even m_alpha <= 0):
// e^{(lambda-rho) t} P_{-rho}^{(-lambda, 2 rho - 1)}(1 - 2 e^{-2t}).
Complex phi_jacobi(const SymmetricPair& pair, Complex lambda, double t);

// Closed form for osp with p = 0 (rho = -q):
// e^{lambda t} sum_{k=0}^{q} C(lambda+q, k) C(q-lambda, q-k) e^{(q-2k) t}.
Complex phi_osp_p0(int q, Complex lambda, double t);

// gl(1|1): phi_lambda(e^h) = -mu e^{lambda(h)} sinh(alpha(h)) at
// h = a_plus h+ + a_minus h-.
Complex phi_gl11(const GL11Param& param, double a_plus, double a_minus);

} // namespace hcss
