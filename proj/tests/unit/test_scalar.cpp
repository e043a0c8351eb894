// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/parse.hpp"
#include "qsigma/scalar.hpp"

using namespace qsigma;

TEST_CASE("rational functions reduce to lowest terms") {
  Scalar q = Scalar::q();
  Scalar x = (q * q - Scalar(1)) / (q - Scalar(1));
  CHECK(x == q + Scalar(1));
  CHECK(x.str() == "q + 1");
}

TEST_CASE("printing clears integer denominators") {
  Scalar q = Scalar::q();
  CHECK(((q * q - Scalar(1)) / (Scalar(2) * q)).str() == "(q^2 - 1)/(2*q)");
  CHECK(q.inverse().str() == "1/q");
}

TEST_CASE("zero denominator is a math error") {
  CHECK_THROWS_AS(Scalar(Poly(1), Poly()), MathError);
  CHECK_THROWS_AS(Scalar().inverse(), MathError);
}

TEST_CASE("multivariate gcd cancels common factors") {
  Scalar q = Scalar::q(), s = Scalar::s(), L = Scalar::L();
  Scalar a = (q * s - L) * (q + s);
  Scalar b = (q * s - L) * (s - Scalar(1));
  CHECK(a / b == (q + s) / (s - Scalar(1)));
}

TEST_CASE("q power ratio") {
  Scalar s = Scalar::s(), q = Scalar::q();
  CHECK(q_power_ratio(s * q.pow(3), s) == 3);
  CHECK(q_power_ratio(s * q.pow(-2), s) == -2);
  CHECK_FALSE(q_power_ratio(s + Scalar(1), s).has_value());
}

TEST_CASE("scalar parse and print round trip") {
  for (const char* t : {"q + 1", "(q^2 - 1)/(2*q)", "1/q", "-s^2*L + 3", "(L*s)/(q - 1)"}) {
    Scalar x = parse_scalar(t);
    CHECK(parse_scalar(x.str()) == x);
  }
}

namespace {
Poly random_poly(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Exponents ex{};
    ex[kQ] = e(rng);
    ex[kS] = e(rng);
    ex[kL] = e(rng) / 2;
    ts.push_back(Term{ex, mpq_class(c(rng))});
  }
  return Poly::from_terms(std::move(ts));
}
}  // namespace

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly g = gcd(a * c, b * c);
    CHECK(g.divide_exact(c.monic()).has_value());
    CHECK((a * c).divide_exact(g).has_value());
    CHECK((b * c).divide_exact(g).has_value());
    Poly cof = gcd(*(a * c).divide_exact(g), *(b * c).divide_exact(g));
    CHECK(cof.is_one());
  }
}
