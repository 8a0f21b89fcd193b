#pragma once

#include <functional>
#include <span>

#include "hcss/oracle.hpp"
#include "hcss/rootdata.hpp"

namespace hcss {

// Radial part of the invariant Laplacian on the anisotropic pairs:
//   Delta(L) f = f'' + (m_alpha coth t + 2 m_2alpha coth 2t) f'.
// The spherical functions satisfy Delta(L) phi = (lambda^2 - rho^2) phi.
// The gl(1|1) pair is excluded: its closed-form phi is not an eigenfunction
// of this operator with m_alpha = -2 (the isotropic root contributes a
// different radial part, which is not treated here).
struct RadialOperator {
  double m_alpha = 0.0;
  double m_2alpha = 0.0;
};

RadialOperator radial_operator(const SymmetricPair& pair);

// Delta(L) f at t via 5-point central stencils with step h (deliberately
// independent of the jet machinery that produced f).
Complex apply(const RadialOperator& op, const std::function<Complex(double)>& f, double t,
              double h);

enum class PhiMethod { Series, Jacobi, Closed, Integral };

// max over t_list of |Delta(L) phi - (lambda^2 - rho^2) phi| /
// (|lambda^2 - rho^2| |phi| + eps).
double eigen_residual(const SymmetricPair& pair, Complex lambda, PhiMethod method,
                      std::span<const double> t_list, double h = 1e-3,
                      const OracleOptions& oracle_opt = {});

} // namespace hcss
