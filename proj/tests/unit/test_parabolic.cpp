// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/parabolic.hpp"
#include "qsigma/parse.hpp"

using namespace qsigma;

namespace {
const Scalar q = Scalar::q();
const Scalar one(1);
Laurent T(long e = 1) { return Laurent::monomial(e); }
SuperQElement el(const char* t) { return parse_element(t); }

Laurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ex(-2, 3);
  std::uniform_int_distribution<int> coef(-3, 3), count(0, 3);
  Laurent f;
  int n = count(rng);
  for (int i = 0; i < n; ++i) f += T(ex(rng)) * Scalar(coef(rng));
  return f;
}
}  // namespace

TEST_CASE("g0a_element examples") {
  HalfElement d{Laurent(one), Laurent(one)};
  CHECK(g0a_element(d, one, Laurent()) == el("E11 + E22"));
  CHECK(g0a_element(d, Laurent(), one) == el("E11 + E22 - C"));
  HalfElement e{Laurent(), T()};
  CHECK(g0a_element(e, one, Laurent()) == el("(T)*E11 + (T)*E22"));
}

TEST_CASE("g0a_element is the bracket with d") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 40; ++round) {
    HalfElement d{random_laurent(rng), random_laurent(rng)};
    Laurent f = random_laurent(rng), g = random_laurent(rng);
    SuperQElement a = SuperQElement::term(0, f, Sector::k12) + SuperQElement::term(1, g, Sector::k21);
    CHECK(g0a_element(d, f, g) == superbracket(a, d.element()));
  }
}

TEST_CASE("minimal parabolic slices") {
  HalfElement unit{Laurent(one), Laurent(one)};
  ParabolicSlice a = min_parabolic_slice(unit, HalfInt::half());
  CHECK(a.generator(Sector::k12) == Laurent(one));
  CHECK(a.generator(Sector::k21) == Laurent(one));
  ParabolicSlice b = min_parabolic_slice(HalfElement{T() - one, Laurent(one)}, HalfInt::half());
  CHECK(b.generator(Sector::k12) == T() - one);
  CHECK(b.generator(Sector::k21) == Laurent(one));
  ParabolicSlice c = min_parabolic_slice(unit, HalfInt(1));
  CHECK(c.generator(Sector::k11) == Laurent(one));
  CHECK(c.generator(Sector::k22) == Laurent(one));
  CHECK_THROWS_AS(min_parabolic_slice(HalfElement{}, HalfInt::half()), MathError);
  CHECK_THROWS_AS(min_parabolic_slice(unit, HalfInt(4)), MathError);
}

TEST_CASE("degree -1 slice multiplies the sector ideals") {
  HalfElement d{T() - q, T() - one};
  ParabolicSlice c = min_parabolic_slice(d, HalfInt(1));
  CHECK(c.generator(Sector::k11) == (T() - q) * (T() - one));
  // M22 pairs b12 with b21(T/q): (T - q)(T/q - 1), normalised.
  CHECK(c.generator(Sector::k22) == (T() - q) * (T() - q));
}

TEST_CASE("slices shrink monotonically in depth") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 6; ++round) {
    HalfElement d{random_laurent(rng), random_laurent(rng)};
    if (d.is_zero()) continue;
    bool prev_nonzero = true;
    for (HalfInt k = HalfInt::half(); k <= HalfInt(3); k += HalfInt::half()) {
      ParabolicSlice sl = min_parabolic_slice(d, k, 1);
      bool nonzero = !sl.generators.empty();
      if (nonzero) CHECK(prev_nonzero);
      prev_nonzero = nonzero;
    }
  }
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(HalfElement{Laurent(one), Laurent(one)}));
  CHECK_FALSE(is_nondegenerate(HalfElement{}));
  CHECK(is_nondegenerate(HalfElement{T(2) + one, Laurent()}));
}

TEST_CASE("singular vector check") {
  HalfElement unit{Laurent(one), Laurent(one)};
  CHECK(singular_vector_check(SSqWeight::zero(), unit).singular);
  RawLabels spike{0, 0, {{0, -one}}, {}, Scalar(0)};
  SingularReport r = singular_vector_check(WeightFunctional(spike), unit);
  CHECK_FALSE(r.singular);
  CHECK(r.failing_value == -one);

  QuasiPolynomial p12 = QuasiPolynomial::term(q, UPoly::constant(one));
  QuasiPolynomial p21 = QuasiPolynomial::term(one, UPoly::constant(one));
  SSqWeight w{p12, p21, Scalar(0), std::nullopt};
  HalfElement d{T() - q, T() - one};
  CHECK(singular_vector_check(w, d).singular);
  CHECK_FALSE(singular_vector_check(w, HalfElement{T() - one, T() - one}).singular);
  WeightFunctional bumped(w);
  bumped.perturb_label(2, 1, one);
  CHECK_FALSE(singular_vector_check(bumped, d).singular);
}
