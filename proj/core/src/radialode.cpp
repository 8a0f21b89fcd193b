#include "hcss/radialode.hpp"

#include <cmath>

#include "hcss/hcseries.hpp"

namespace hcss {

RadialOperator radial_operator(const SymmetricPair& pair) {
  if (!pair.anisotropic())
    throw DomainError("radial_operator: no radial Laplacian is implemented for gl(1|1)");
  return RadialOperator{static_cast<double>(pair.m_alpha()),
                        static_cast<double>(pair.m_2alpha())};
}

Complex apply(const RadialOperator& op, const std::function<Complex(double)>& f, double t,
              double h) {
  if (!(h > 0.0)) throw DomainError("radial apply: need h > 0");
  if (!(t - 2.0 * h > 0.0)) throw DomainError("radial apply: t too close to 0 for the stencil");
  const Complex fm2 = f(t - 2.0 * h);
  const Complex fm1 = f(t - h);
  const Complex f0 = f(t);
  const Complex fp1 = f(t + h);
  const Complex fp2 = f(t + 2.0 * h);
  const Complex d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  const Complex d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  const double coth_t = 1.0 / std::tanh(t);
  const double coth_2t = 1.0 / std::tanh(2.0 * t);
  return d2 + (op.m_alpha * coth_t + 2.0 * op.m_2alpha * coth_2t) * d1;
}

double eigen_residual(const SymmetricPair& pair, Complex lambda, PhiMethod method,
                      std::span<const double> t_list, double h,
                      const OracleOptions& oracle_opt) {
  const RadialOperator op = radial_operator(pair);
  std::function<Complex(double)> phi;
  switch (method) {
    case PhiMethod::Series:
      phi = [&pair, lambda](double t) { return phi_spherical(pair, lambda, t); };
      break;
    case PhiMethod::Jacobi:
      phi = [&pair, lambda](double t) { return phi_jacobi(pair, lambda, t); };
      break;
    case PhiMethod::Closed:
      if (pair.family() != Family::OrthoSymplectic || pair.p() != 0)
        throw DomainError("eigen_residual: closed form only for osp with p = 0");
      phi = [&pair, lambda](double t) { return phi_osp_p0(pair.q(), lambda, t); };
      break;
    case PhiMethod::Integral:
      phi = [&pair, lambda, &oracle_opt](double t) {
        return phi_integral(pair, lambda, t, oracle_opt);
      };
      break;
  }

  const Complex eigen = lambda * lambda - pair.rho_d() * pair.rho_d();
  constexpr double kEps = 1e-12;
  double worst = 0.0;
  for (double t : t_list) {
    const Complex lhs = apply(op, phi, t, h);
    const Complex rhs = eigen * phi(t);
    const double denom = std::abs(eigen) * std::abs(phi(t)) + kEps;
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

} // namespace hcss
