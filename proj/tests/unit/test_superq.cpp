// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/parse.hpp"
#include "qsigma/superq.hpp"

using namespace qsigma;

namespace {
SuperQElement el(const char* text) { return parse_element(text); }
}  // namespace

TEST_CASE("associative product examples") {
  CHECK(assoc_mul(el("z*(T)*E11"), el("z^2*(T^3)*E11")) == el("z^3*(q^2*T^4)*E11"));
  CHECK(assoc_mul(el("E12"), el("E12")).is_zero());
  CHECK(assoc_mul(el("E12"), el("E21")) == el("E11"));
}

TEST_CASE("superbracket examples") {
  SuperQElement b = superbracket(el("z*(T)*E11"), el("z^-1*(T^-1)*E11"));
  CHECK(b == SuperQElement::central(Scalar::q(-1)));
  CHECK(b.str() == "(1/q)*C");
  CHECK(superbracket(el("E12"), el("E12")).is_zero());
  CHECK(superbracket(el("E11"), el("E12")) == el("E12"));
  CHECK(superbracket(el("C"), el("z*(T)*E11")).is_zero());
}

TEST_CASE("str0") {
  CHECK(str0(el("(T^2)*E11 + (3 + T^-1)*E22")) == Scalar(-3));
  CHECK(str0(el("E12")).is_zero());
  CHECK(str0(el("C")).is_zero());
}

TEST_CASE("psi examples") {
  CHECK(psi(el("z*(T)*E11"), el("z^-1*(T^-1)*E11")) == Scalar::q(-1));
  CHECK(psi(el("z*E12"), el("z*E21")).is_zero());
  CHECK(psi(el("z^2*E11"), el("z^-2*E11")) == Scalar(2));
  // super antisymmetry of the extension
  CHECK(psi(el("z^-1*(T^-1)*E11"), el("z*(T)*E11")) == -Scalar::q(-1));
  SuperQElement a = el("z^2*(T - q)*E12"), b = el("z^-2*(T^2 + s)*E21");
  CHECK(psi(b, a) == psi(a, b));
}

TEST_CASE("sigma") {
  CHECK(sigma(el("(T)*E11")) == el("(q*T)*E11"));
  CHECK(sigma(el("E22")) == el("E22"));
  CHECK(sigma(el("z*(T^-1)*E21")) == el("z*(1/q*T^-1)*E21"));
}

TEST_CASE("grade decomposition") {
  SuperQElement x = el("z^2*(T)*E11 + z^2*E22");
  auto g = grade_decompose(x);
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->first == HalfInt(2));
  CHECK(grade_decompose(el("z^3*E12")).begin()->first == HalfInt::from_twice(7));
  CHECK(grade_decompose(el("z^3*E21")).begin()->first == HalfInt::from_twice(5));
}

TEST_CASE("action on the superline") {
  LoopVector v{{LoopBasis{3, 1}, Scalar(1)}};
  LoopVector out = act_on_superline(el("z*(T^2)*E11"), v);
  CHECK(out == LoopVector{{LoopBasis{4, 1}, Scalar::q(6)}});
  LoopVector w{{LoopBasis{5, 1}, Scalar(1)}};
  CHECK(act_on_superline(el("E21"), w) == LoopVector{{LoopBasis{5, 2}, Scalar(1)}});
  CHECK_THROWS_AS(act_on_superline(el("C"), w), MathError);
}

TEST_CASE("element printing and parsing") {
  SuperQElement x = el("z^-1*(T - q)*E12 + (T - 1)*E21");
  CHECK(x.coeff(-1, Sector::k12) == parse_laurent("T - q"));
  CHECK(x.coeff(0, Sector::k21) == parse_laurent("T - 1"));
  CHECK(el("(1/2)*C") == SuperQElement::central(Scalar(mpq_class(1, 2))));
  CHECK(el(x.str().c_str()) == x);
  SuperQElement y = el("z^2*(T^-3 - s/q)*E22 - 3*C");
  CHECK(y.str() == "z^2*(-s/q + T^-3)*E22 - 3*C");
  CHECK(el(y.str().c_str()) == y);
  SuperQElement u = el("E12 - z^2*E11 + (-1/(q - 1))*C");
  CHECK(u.str() == "E12 - z^2*E11 + (-1/(q - 1))*C");
  CHECK(el(u.str().c_str()) == u);
  try {
    el("z^1*(T+");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(el("w*E11"), ParseError);
  CHECK_THROWS_AS(el("z*T"), ParseError);
}
