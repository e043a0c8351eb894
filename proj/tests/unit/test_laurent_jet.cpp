// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/jet.hpp"
#include "qsigma/laurent.hpp"
#include "qsigma/parse.hpp"

using namespace qsigma;

namespace {
Laurent T(long e = 1) { return Laurent::monomial(e); }
}  // namespace

TEST_CASE("jet_exp expansions") {
  CHECK(jet_exp(0, 3) == Jet(3, Scalar(1)));
  Scalar L = Scalar::L();
  CHECK(jet_exp(1, 1) == Jet({Scalar(1), L}));
  CHECK(jet_exp(2, 2) == Jet({Scalar(1), Scalar(2) * L, Scalar(2) * L * L}));
  for (long k = -10; k <= 10; k += 3)
    for (long k2 = -10; k2 <= 10; k2 += 4)
      CHECK(jet_exp(k, 3) * jet_exp(k2, 3) == jet_exp(k + k2, 3));
  CHECK(jet_exp(3, 2) * jet_exp(-3, 2) == Jet(2, Scalar(1)));
}

TEST_CASE("jet order mismatch is rejected") { CHECK_THROWS_AS(jet_exp(1, 1) + jet_exp(1, 2), MathError); }

TEST_CASE("laurent arithmetic") {
  Scalar q = Scalar::q();
  CHECK(T() * T(-1) == Laurent(Scalar(1)));
  Laurent prod = (T() + Laurent(q)) * (T(-1) + Laurent(Scalar(1)));
  CHECK(prod == Laurent::monomial(-1, q) + Laurent(q + Scalar(1)) + T());
  CHECK(const_term(prod) == q + Scalar(1));
  CHECK(const_term(Laurent::monomial(-1, Scalar(3))) == Scalar());
}

TEST_CASE("argument scaling") {
  Scalar q = Scalar::q();
  CHECK(scale_arg(T(), q) == Laurent::monomial(1, q));
  CHECK(scale_arg(T(2) + T(-1), q * q) == Laurent::monomial(2, q.pow(4)) + Laurent::monomial(-1, q.pow(-2)));
  Laurent f = T(3) - Laurent(Scalar::s()) + T(-2);
  CHECK(scale_arg(f, Scalar(1)) == f);
  CHECK(scale_arg(scale_arg(f, q), Scalar::s()) == scale_arg(f, q * Scalar::s()));
  CHECK(const_term(scale_arg(f, q)) == const_term(f));
  CHECK_THROWS_AS(scale_arg(f, Scalar()), MathError);
}

TEST_CASE("jet evaluation") {
  Scalar c = Scalar::s() / Scalar::q(), L = Scalar::L();
  CHECK(jet_eval(T(), c, 0) == Jet(0, c));
  CHECK(jet_eval(T(), c, 1) == Jet({c, c * L}));
  CHECK(jet_eval(T(-1), c, 1) == Jet({c.inverse(), -c.inverse() * L}));
  Laurent f = T(2) - Laurent(Scalar(3)), g = T(-1) + Laurent(Scalar::q());
  CHECK(jet_eval(f * g, c, 2) == jet_eval(f, c, 2) * jet_eval(g, c, 2));
  CHECK_THROWS_AS(jet_eval(f, Scalar(), 1), MathError);
}

TEST_CASE("ideal generators") {
  CHECK(ideal_gcd({}).is_zero());
  std::vector<Laurent> fs = {T() - Laurent(Scalar(1)), T(2) - Laurent(Scalar(1))};
  CHECK(ideal_gcd(fs) == T() - Laurent(Scalar(1)));
  std::vector<Laurent> unit = {T(3)};
  CHECK(ideal_gcd(unit) == Laurent(Scalar(1)));
  std::vector<Laurent> shifted = {Laurent::monomial(-2, Scalar(2)) * (T() - Laurent(Scalar::q()))};
  CHECK(ideal_gcd(shifted) == T() - Laurent(Scalar::q()));
}

TEST_CASE("laurent printing and parsing") {
  Laurent f = parse_laurent("T^2 + 3*T^-1 - q");
  CHECK(f.str() == "T^2 - q + 3*T^-1");
  CHECK(parse_laurent(f.str()) == f);
  Laurent g = parse_laurent("(q^2 - 1)/(2*q)*T - (s + 1)");
  CHECK(parse_laurent(g.str()) == g);
  CHECK_THROWS_AS(parse_laurent("z*T"), ParseError);
}
