#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hcss/cutoff.hpp"
#include "hcss/gammafn.hpp"
#include "hcss/oracle.hpp"
#include "hcss/quadrature.hpp"
#include "hcss/rootdata.hpp"

namespace hcss {

// A multiplicative constant relating two evaluation routes. The closed forms
// here all use unit normalization; cross-route comparisons fit one constant
// at a reference lambda and check the rest of the grid.
struct NormalizationConstant {
  enum class Method { UnitConvention, FittedToOracle };
  Complex value{1.0};
  Complex fitted_at{0.0};
  Method method = Method::UnitConvention;
};

// Reference point for one-constant fits: lambda = |rho| + 2, away from the
// zeros and poles of every tested grid.
Complex fit_reference_lambda(const SymmetricPair& pair);

// Gindikin-Karpelevic quotient with unit constant, for the anisotropic
// families:
//   2^-lambda Gamma(lambda) /
//   [Gamma((lambda + m_a/2 + 1)/2) Gamma((lambda + m_a/2 + m_2a)/2)].
// Meromorphic in lambda; throws PoleError on a pole of the numerator and
// returns 0 at the (right-half-plane) zeros coming from denominator poles.
Complex c_formula(const SymmetricPair& pair, Complex lambda);

// Gamma(lambda) / Gamma(lambda + rho): the natural normalization of the
// orthosymplectic c-function; proportional to c_formula by the duplication
// formula, with a lambda-independent factor.
Complex c_gamma_quotient(const SymmetricPair& pair, Complex lambda);

// c for the isotropic gl(1|1) pair. Existence depends on the direction
// h0 = c_plus h+ + c_minus h-; non-existence is a value, not an error.
struct CGl11Result {
  bool exists = false;
  Complex value{0.0};
};
CGl11Result c_gl11(const GL11Param& param);

// Unitary family, m_alpha <= 0: the cutoff-free integral representation
//   int_0^inf ds d^{1-rho}/dr^{1-rho} [((1+r)^2 + s^2)^{-(lambda+rho)/2}]
// at r = 0, with unit front constant. Jet differentiation in r, quadrature
// in s.
Complex c_integral_unitary(const SymmetricPair& pair, Complex lambda,
                           const QuadratureSpec& quad = {});
// The derivative order 1 - rho used above.
int c_integral_unitary_order(const SymmetricPair& pair);

// The two cutoff-split halves whose sum is cutoff-independent (the
// individual halves are not). Used by the chi-cancellation checks.
std::pair<Complex, Complex> c_integral_unitary_split(const SymmetricPair& pair, Complex lambda,
                                                     const CutoffSpec& cutoff,
                                                     const QuadratureSpec& quad = {});

// Orthosymplectic c through the chart integrals: point-derivative formula
// for even m_alpha <= 0, an r^{-1/2}-weighted integral pair for odd
// m_alpha < 0, the classical radial integral for m_alpha > 0.
Complex c_integral_osp(const SymmetricPair& pair, Complex lambda,
                       const CutoffSpec& cutoff = {}, const QuadratureSpec& quad = {});

// Estimate of lim_{t->inf} e^{-t(lambda-rho)} phi_lambda(e^{t h0}) from
// oracle values on a t-grid, polynomial (Richardson) extrapolation in
// x = e^{-2t}.
struct LimitEstimate {
  Complex value{0.0};
  double residual = 0.0; // magnitude of the last extrapolation correction
  bool converged = false;
};

std::vector<double> default_limit_t_grid(); // {6, 8, 10, 12, 16, 20}

LimitEstimate c_limit_oracle(const SymmetricPair& pair, Complex lambda,
                             std::span<const double> t_grid = {},
                             const OracleOptions& opt = {});

LimitEstimate c_limit_oracle_gl11(const GL11Param& param,
                                  std::span<const double> t_grid = {});

} // namespace hcss
