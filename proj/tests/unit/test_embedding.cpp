// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "qsigma/embedding.hpp"
#include "qsigma/errors.hpp"
#include "qsigma/parse.hpp"

using namespace qsigma;

namespace {
const Scalar s = Scalar::s();
const Scalar q = Scalar::q();
const HalfInt h = HalfInt::half();
SuperQElement el(const char* t) { return parse_element(t); }

SuperQElement random_homogeneous(std::mt19937_64& rng, int parity, long n_min, long n_max) {
  std::uniform_int_distribution<long> deg(n_min, n_max), ex(-2, 2);
  std::uniform_int_distribution<int> coef(-2, 2), count(1, 2), pick(0, 1);
  SuperQElement x;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Sector sec = parity ? (pick(rng) ? Sector::k12 : Sector::k21) : (pick(rng) ? Sector::k11 : Sector::k22);
    Laurent f;
    for (int t = 0; t < 2; ++t) f += Laurent::monomial(ex(rng), Scalar(coef(rng)));
    x.add_term(deg(rng), sec, f);
  }
  return x;
}
}  // namespace

TEST_CASE("phi strands") {
  BandedOperator a = phi(el("z*(T)*E11"), s, 0);
  CHECK(a.entry(HalfInt(1), HalfInt(2)) == Jet(0, s * q.pow(-2)));
  BandedOperator b = phi(el("E12"), s, 0);
  CHECK(b.entry(HalfInt(3), HalfInt(3) - h) == Jet(0, Scalar(1)));
  BandedOperator c = phi(el("(T)*E11"), s, 1);
  Scalar v = s * q.pow(-3);
  CHECK(c.entry(HalfInt(3), HalfInt(3)) == Jet({v, v * Scalar::L()}));
  CHECK_THROWS_AS(phi(el("C"), s, 0), MathError);
}

TEST_CASE("phi hat corrections") {
  CHECK(phi_hat(el("C"), s, 2).central() == Jet(2, Scalar(1)));
  CHECK(phi_hat(el("(T)*E11"), s, 0).central() == Jet(0, s / (Scalar(1) - q)));
  CHECK(phi_hat(el("E11"), s, 0).central().is_zero());
  CHECK(phi_hat(el("(T)*E22"), s, 0).central() == Jet(0, -s / (Scalar(1) - q)));
}

TEST_CASE("windows") {
  DenseWindow w = window(phi(el("z*(T)*E11"), s, 0), HalfInt(-1), HalfInt(1));
  REQUIRE(w.index.size() == 5);
  CHECK(w.rows[0][2] == Jet(0, s));      // (-1, 0)
  CHECK(w.rows[2][4] == Jet(0, s / q));  // (0, 1)
  DenseWindow id = window(phi(el("E11"), s, 0), HalfInt(0), HalfInt(1));
  CHECK(id.rows[0][0] == Jet(0, Scalar(1)));
  CHECK(id.rows[1][1].is_zero());
  CHECK(id.rows[2][2] == Jet(0, Scalar(1)));
  CHECK(window(phi(SuperQElement(), s, 0), HalfInt(0), HalfInt(1)).rows[0][0].is_zero());
}

TEST_CASE("module action") {
  SuperLineVector v0{{HalfInt(0), Scalar(1)}};
  CHECK(module_action(el("z*(T^2)*E11"), s, v0) == SuperLineVector{{HalfInt(-1), s * s}});
  CHECK(module_action(el("E21"), s, v0) == SuperLineVector{{-h, Scalar(1)}});
  CHECK(module_action(el("E12"), s, SuperLineVector{{-h, Scalar(1)}}) == SuperLineVector{{HalfInt(0), Scalar(1)}});
  CHECK_THROWS_AS(module_action(el("C"), s, v0), MathError);
}

TEST_CASE("kernel test") {
  CHECK(kernel_test(SuperQElement(), s, 0).in_kernel);
  auto r = kernel_test(el("z*(T)*E11"), s, 0);
  CHECK_FALSE(r.in_kernel);
  CHECK(*r.witness == GlIndex{HalfInt(-1), HalfInt(0)});
  CHECK(*r.witness_value == Jet(0, s));
  auto r2 = kernel_test(el("(T - s)*E11"), s, 0);
  CHECK_FALSE(r2.in_kernel);
  CHECK(r2.witness->second == HalfInt(1));
}

TEST_CASE("multi-point embedding") {
  CHECK(phi_multi(el("E11"), {s}, {0}).size() == 1);
  CHECK_THROWS_AS(phi_multi(el("E11"), {s, q * s}, {0, 0}), MathError);
  CHECK(phi_multi(el("E11"), {s, Scalar::symbol(5)}, {0, 1}).size() == 2);
}

TEST_CASE("cocycle pullback on a pair whose matrix bracket vanishes") {
  SuperQElement x = el("z*(T)*E11"), y = el("z^-1*(T^-1)*E11");
  CHECK(superbracket(x, y).without_central().is_zero());
  CHECK(banded_cocycle(phi(x, s, 0), phi(y, s, 0)) == Jet(0, psi(x, y)));
}

TEST_CASE("pullback differs from psi by the phi-hat correction") {
  // z M11 and z^-1 T M11: psi vanishes but C(phi x, phi y) = s.
  SuperQElement x = el("z*E11"), y = el("z^-1*(T)*E11");
  CHECK(psi(x, y).is_zero());
  CHECK(banded_cocycle(phi(x, s, 0), phi(y, s, 0)) == Jet(0, s));
  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    long r = 1 + round % 3;
    std::size_t m = static_cast<std::size_t>(round % 2);
    int px = round % 2, py = (round / 2) % 2;
    SuperQElement a = random_homogeneous(rng, px, r, r), b = random_homogeneous(rng, py, -r, -r);
    Jet correction = phi_hat(superbracket(a, b).without_central(), s, m).central();
    CHECK(banded_cocycle(phi(a, s, m), phi(b, s, m)) == Jet(m, psi(a, b)) + correction);
  }
}

TEST_CASE("phi hat is a homomorphism") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 24; ++round) {
    std::size_t m = static_cast<std::size_t>(round % 3);
    int px = round % 2, py = (round / 2) % 2;
    SuperQElement x = random_homogeneous(rng, px, -2, 2), y = random_homogeneous(rng, py, -2, 2);
    GlInfElement lhs = phi_hat(superbracket(x, y), s, m).truncate(HalfInt(-6), HalfInt(6));
    GlInfElement rhs = banded_bracket(phi_hat(x, s, m), phi_hat(y, s, m), HalfInt(-6), HalfInt(6));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("intertwining") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 10; ++round) {
    SuperQElement x = random_homogeneous(rng, round % 2, -2, 2);
    BandedOperator op = phi(x, s, 0);
    for (int t = -6; t <= 6; ++t) {
      SuperLineVector v{{HalfInt::from_twice(t), Scalar(1)}};
      CHECK(module_action(x, s, v) == apply_window(op, v));
    }
  }
}

TEST_CASE("principal degree of phi on odd sectors is shifted against the element grading") {
  // z^n M12 is graded n + 1/2, but its image sits on entries (j - n, j - 1/2),
  // i.e. principal degree n - 1/2; M21 is the mirror case. Diagonal sectors agree.
  for (long n : {-2, 0, 3}) {
    SuperQElement x12 = SuperQElement::term(n, Laurent::monomial(1), Sector::k12);
    SuperQElement x21 = SuperQElement::term(n, Laurent::monomial(1), Sector::k21);
    SuperQElement x11 = SuperQElement::term(n, Laurent::monomial(1), Sector::k11);
    HalfInt h = HalfInt::half();
    CHECK(grade_decompose(x12).begin()->first == HalfInt(n) + h);
    CHECK(principal_degree(phi(x12, s, 0).truncate(HalfInt(-6), HalfInt(6))).begin()->first == HalfInt(n) - h);
    CHECK(grade_decompose(x21).begin()->first == HalfInt(n) - h);
    CHECK(principal_degree(phi(x21, s, 0).truncate(HalfInt(-6), HalfInt(6))).begin()->first == HalfInt(n) + h);
    CHECK(principal_degree(phi(x11, s, 0).truncate(HalfInt(-6), HalfInt(6))).begin()->first == HalfInt(n));
  }
}
