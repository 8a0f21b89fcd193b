#include "hcss/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hcss {

namespace {

// Kronrod 15-point nodes and weights on [-1, 1] (positive half), with the
// embedded Gauss 7-point weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double err;
  bool operator<(const Panel& other) const { return err < other.err; }
};

Panel eval_panel(const Integrand& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  Complex kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (i == 7) {
      const Complex fc = f(c);
      kron += kWgk[7] * fc;
      gauss += kWg[3] * fc;
      break;
    }
    const Complex fl = f(c - h * kXgk[i]);
    const Complex fr = f(c + h * kXgk[i]);
    kron += kWgk[i] * (fl + fr);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fl + fr);
  }
  kron *= h;
  gauss *= h;
  const double delta = std::abs(kron - gauss);
  // QUADPACK-style sharpening of the raw difference.
  const double scale = std::abs(kron) + 1e-300;
  double err = delta;
  if (delta != 0.0) err = scale * std::min(1.0, std::pow(200.0 * delta / scale, 1.5));
  err = std::max(err, 50.0 * 2.2e-16 * scale);
  return Panel{a, b, kron, err};
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  QuadResult out;
  if (a == b) return out;

  const int seeds = std::clamp(std::min(spec.initial_panels, spec.max_panels), 1, 1024);
  std::priority_queue<Panel> heap;
  Complex total = 0.0;
  double err = 0.0;
  for (int i = 0; i < seeds; ++i) {
    const double lo = a + (b - a) * i / seeds;
    const double hi = a + (b - a) * (i + 1) / seeds;
    Panel panel = eval_panel(f, lo, hi);
    total += panel.value;
    err += panel.err;
    heap.push(panel);
  }
  int panels = seeds;

  while (panels < spec.max_panels) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err <= tol) break;
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) { // interval at floating-point resolution
      heap.push(worst);
      break;
    }
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  out.value = total;
  out.err_est = err;
  out.panels = panels;
  out.converged = err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) * 1.0001 ||
                  err <= spec.abs_tol;
  return out;
}

QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec) {
  auto g = [&f](double u) {
    const double w = 1.0 - u;
    const double r = u / w;
    return f(r) / (w * w);
  };
  return integrate(g, 0.0, 1.0, spec);
}

QuadResult integrate_exp_sinh(const Integrand& f, const QuadratureSpec& spec) {
  // s(t) = exp((pi/2) sinh t); trapezoid in t with level doubling. The
  // window |t| <= 4.2 spans s in [1e-24, 1e24] without overflowing the
  // weights for tails as slow as s^{-1-eps} with eps >= ~0.3.
  constexpr double kHalfPi = 1.5707963267948966;
  constexpr double kT = 4.2;
  auto node = [&](double t) {
    const double sh = std::sinh(t);
    const double s = std::exp(kHalfPi * sh);
    const Complex v = f(s);
    return v * (s * kHalfPi * std::cosh(t));
  };

  QuadResult out;
  double h = kT / 4.0;
  Complex total = node(0.0);
  for (int i = 1; i * h <= kT; ++i) total += node(i * h) + node(-i * h);
  total *= h;
  int evals = 9;

  for (int level = 0; level < 12; ++level) {
    Complex refined = 0.0;
    const double h2 = 0.5 * h;
    for (int i = 1; i * h2 <= kT; i += 2) refined += node(i * h2) + node(-i * h2);
    evals += 2 * static_cast<int>(kT / h);
    refined = 0.5 * total + h2 * refined;
    const double diff = std::abs(refined - total);
    total = refined;
    h = h2;
    out.err_est = diff;
    out.panels = evals;
    if (level >= 2 && diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
      out.value = total;
      out.converged = true;
      return out;
    }
  }
  out.value = total;
  out.converged = out.err_est <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) * 4.0;
  return out;
}

Complex integrate_exp_sinh_checked(const Integrand& f, const QuadratureSpec& spec) {
  QuadResult r = integrate_exp_sinh(f, spec);
  if (!r.converged)
    throw ConvergenceError("exp-sinh quadrature: tolerance not reached (err_est=" +
                           std::to_string(r.err_est) + ")");
  return r.value;
}

Complex integrate_checked(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  QuadResult r = integrate(f, a, b, spec);
  if (!r.converged)
    throw ConvergenceError("quadrature: panel budget exhausted (err_est=" +
                           std::to_string(r.err_est) + ")");
  return r.value;
}

Complex integrate_half_line_checked(const Integrand& f, const QuadratureSpec& spec) {
  QuadResult r = integrate_half_line(f, spec);
  if (!r.converged)
    throw ConvergenceError("quadrature: panel budget exhausted (err_est=" +
                           std::to_string(r.err_est) + ")");
  return r.value;
}

} // namespace hcss
