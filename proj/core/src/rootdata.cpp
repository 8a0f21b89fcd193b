#include "hcss/rootdata.hpp"

#include <numeric>

namespace hcss {

Rational::Rational(long n, long d) : num(n), den(d) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator*(Rational a, Rational b) {
  return Rational(a.num * b.num, a.den * b.den);
}

SymmetricPair SymmetricPair::make(Family family, int p, int q) {
  if (p < 0 || q < 0) throw DomainError("SymmetricPair: p, q must be nonnegative");
  if (family == Family::GL11) return SymmetricPair(family, 1, 1);
  return SymmetricPair(family, p, q);
}

int SymmetricPair::m_alpha() const {
  switch (family_) {
    case Family::Unitary: return 2 * (p_ - q_);
    case Family::OrthoSymplectic: return p_ - 2 * q_;
    case Family::GL11: return -2;
  }
  throw DomainError("SymmetricPair: bad family");
}

int SymmetricPair::m_2alpha() const {
  return family_ == Family::Unitary ? 1 : 0;
}

Rational SymmetricPair::rho() const {
  // rho = (m_alpha + 2 m_2alpha) / 2 in units of alpha.
  return Rational(m_alpha() + 2 * m_2alpha(), 2);
}

int SymmetricPair::weyl_order() const {
  if (family_ == Family::GL11) return 1;
  if (family_ == Family::OrthoSymplectic && p_ == 0) return 1;
  return 2;
}

bool SymmetricPair::finite_series() const {
  return family_ == Family::OrthoSymplectic && m_alpha() <= 0 && m_alpha() % 2 == 0;
}

std::string SymmetricPair::family_name() const {
  switch (family_) {
    case Family::Unitary: return "unitary";
    case Family::OrthoSymplectic: return "osp";
    case Family::GL11: return "gl11";
  }
  return "?";
}

std::string SymmetricPair::spec_string() const {
  switch (family_) {
    case Family::Unitary: return "u:" + std::to_string(p_) + ":" + std::to_string(q_);
    case Family::OrthoSymplectic: return "osp:" + std::to_string(p_) + ":" + std::to_string(q_);
    case Family::GL11: return "gl11";
  }
  return "?";
}

SymmetricPair parse_pair(std::string_view text) {
  if (text == "gl11") return SymmetricPair::make(Family::GL11, 1, 1);

  auto first = text.find(':');
  auto second = text.rfind(':');
  if (first == std::string_view::npos || second == first)
    throw ParseError("pair: expected 'family:p:q' or 'gl11', got '" + std::string(text) + "'");

  std::string_view fam = text.substr(0, first);
  Family family;
  if (fam == "u" || fam == "unitary") family = Family::Unitary;
  else if (fam == "osp") family = Family::OrthoSymplectic;
  else throw ParseError("pair: unknown family '" + std::string(fam) + "' (use u, osp, gl11)");

  auto to_int = [&](std::string_view s) {
    if (s.empty()) throw ParseError("pair: missing p or q in '" + std::string(text) + "'");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("pair: bad integer '" + std::string(s) + "'");
      v = 10 * v + (c - '0');
      if (v > 1000) throw ParseError("pair: p, q out of range");
    }
    return v;
  };

  int p = to_int(text.substr(first + 1, second - first - 1));
  int q = to_int(text.substr(second + 1));
  return SymmetricPair::make(family, p, q);
}

GL11Param make_gl11_param(Complex mu, Complex nu, double c_plus, double c_minus) {
  if (c_plus == 0.0 && c_minus == 0.0)
    throw DomainError("GL11Param: (c_plus, c_minus) must not both vanish");
  return GL11Param{mu, nu, c_plus, c_minus};
}

} // namespace hcss
