#include <doctest.h>

#include "hcss/rootdata.hpp"

using namespace hcss;

TEST_CASE("rootdata: table values for the three families") {
  const auto u21 = SymmetricPair::make(Family::Unitary, 2, 1);
  CHECK(u21.m_alpha() == 2);
  CHECK(u21.m_2alpha() == 1);
  CHECK(u21.rho() == Rational::integer(2));
  CHECK(u21.weyl_order() == 2);

  const auto osp01 = SymmetricPair::make(Family::OrthoSymplectic, 0, 1);
  CHECK(osp01.m_alpha() == -2);
  CHECK(osp01.m_2alpha() == 0);
  CHECK(osp01.rho() == Rational::integer(-1));
  CHECK(osp01.weyl_order() == 1);

  const auto gl = SymmetricPair::make(Family::GL11, 0, 0); // (p,q) recorded as (1,1)
  CHECK(gl.p() == 1);
  CHECK(gl.q() == 1);
  CHECK(gl.m_alpha() == -2);
  CHECK(gl.rho() == Rational::integer(-1));
  CHECK(gl.weyl_order() == 1);
}

TEST_CASE("rootdata: weyl order cases") {
  CHECK(SymmetricPair::make(Family::Unitary, 0, 3).weyl_order() == 2);
  CHECK(SymmetricPair::make(Family::OrthoSymplectic, 0, 2).weyl_order() == 1);
  CHECK(SymmetricPair::make(Family::OrthoSymplectic, 1, 2).weyl_order() == 2);
}

TEST_CASE("rootdata: 2 rho = m_alpha + 2 m_2alpha exactly") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      for (Family f : {Family::Unitary, Family::OrthoSymplectic}) {
        const auto pair = SymmetricPair::make(f, p, q);
        const Rational two_rho = pair.rho() * Rational::integer(2);
        CHECK(two_rho == Rational::integer(pair.m_alpha() + 2 * pair.m_2alpha()));
      }
    }
  }
  const auto gl = SymmetricPair::make(Family::GL11, 1, 1);
  CHECK(gl.rho() * Rational::integer(2) == Rational::integer(-2));
}

TEST_CASE("rootdata: finite-series predicate is rho being a nonpositive integer") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      const auto pair = SymmetricPair::make(Family::OrthoSymplectic, p, q);
      const bool jacobi_case = pair.m_alpha() <= 0 && pair.m_alpha() % 2 == 0;
      const bool rho_nonpos_int = pair.rho().is_integer() && pair.rho().num <= 0;
      CHECK(pair.finite_series() == jacobi_case);
      CHECK(jacobi_case == rho_nonpos_int);
    }
  }
  CHECK_FALSE(SymmetricPair::make(Family::Unitary, 0, 2).finite_series());
}

TEST_CASE("rootdata: pair spec parsing") {
  CHECK(parse_pair("u:2:1").spec_string() == "u:2:1");
  CHECK(parse_pair("osp:0:3").spec_string() == "osp:0:3");
  CHECK(parse_pair("gl11").spec_string() == "gl11");
  CHECK(parse_pair("unitary:1:0").family() == Family::Unitary);
  CHECK_THROWS_AS(parse_pair("so:1:1"), ParseError);
  CHECK_THROWS_AS(parse_pair("u:1"), ParseError);
  CHECK_THROWS_AS(parse_pair("u:x:1"), ParseError);
  CHECK_THROWS_AS(parse_pair(""), ParseError);
}

TEST_CASE("rootdata: gl11 parameter validation") {
  CHECK_THROWS_AS(make_gl11_param(Complex(1.0), Complex(0.0), 0.0, 0.0), DomainError);
  const GL11Param par = make_gl11_param(Complex(1.0), Complex(2.0), 0.5, -0.5);
  CHECK(par.c_plus == 0.5);
}
