#pragma once

#include "hcss/cutoff.hpp"
#include "hcss/grassmann.hpp"
#include "hcss/quadrature.hpp"
#include "hcss/rootdata.hpp"

namespace hcss {

// Brute-force evaluation of the spherical functions straight from their
// integral representations over the nilpotent charts: the ground truth that
// every series / closed-form route is checked against.
//
// Both chart integrals are returned pre-normalized, i.e. with the factor
// exp(t (lambda - rho)) stripped: phi(t) = e^{t(lambda-rho)} (i0 + i_inf).
// The sum i0 + i_inf is cutoff-independent; the two halves individually are
// not.
struct PhiSplit {
  Complex i0{0.0};
  Complex i_inf{0.0};
  Complex sum() const { return i0 + i_inf; }
};

// Iwasawa projection profiles on the nilpotent chart.
// Unitary family: H = 1/2 log((1 - EF)^2 - 4 D^2) in the chart aggregates.
double h_profile_unitary(double d, double ef);
// Orthosymplectic family: H = log(1 + ||y||^2).
double h_profile_osp(double normsq);
Jet h_profile_osp_jet(const Jet& normsq);

// psi(c, y, s) = (c + ||y||^2)^2 + s^2 and its radial shadow
// psi0(c, r, s) = (c + r)^2 + s^2, as a jet in the first radial argument.
Jet psi0_jet(double c, const Jet& r, double s);

struct OracleOptions {
  CutoffSpec cutoff{};
  QuadratureSpec quad{1e-9, 1e-9, 4000};
};

PhiSplit phi_integral_unitary_split(const SymmetricPair& pair, Complex lambda, double t,
                                    const OracleOptions& opt = {});
Complex phi_integral_unitary(const SymmetricPair& pair, Complex lambda, double t,
                             const OracleOptions& opt = {});

PhiSplit phi_integral_osp_split(const SymmetricPair& pair, Complex lambda, double t,
                                const OracleOptions& opt = {});
Complex phi_integral_osp(const SymmetricPair& pair, Complex lambda, double t,
                         const OracleOptions& opt = {});

// Dispatches on the family (GL11 not included: its spherical function is a
// function on the two-dimensional a*, see phi_integral_gl11).
Complex phi_integral(const SymmetricPair& pair, Complex lambda, double t,
                     const OracleOptions& opt = {});
PhiSplit phi_integral_split(const SymmetricPair& pair, Complex lambda, double t,
                            const OracleOptions& opt = {});

// Exact 0|2-dimensional Berezin integral for the gl(1|1) pair, computed
// through the Grassmann engine. h = a_plus h+ + a_minus h-.
Complex phi_integral_gl11(const GL11Param& param, double a_plus, double a_minus);

} // namespace hcss
