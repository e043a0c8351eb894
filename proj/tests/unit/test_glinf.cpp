// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/glinf.hpp"

using namespace qsigma;

namespace {
const HalfInt h = HalfInt::half();
Jet one(std::size_t m = 0) { return Jet(m, Scalar(1)); }
GlInfElement E(HalfInt i, HalfInt j, std::size_t m = 0) { return GlInfElement::unit(i, j, one(m)); }

GlInfElement random_element(std::mt19937_64& rng, std::size_t m, int parity) {
  std::uniform_int_distribution<int> idx(-4, 4), coef(-3, 3), count(1, 3);
  GlInfElement a(m);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    HalfInt i = HalfInt::from_twice(idx(rng));
    HalfInt j = HalfInt::from_twice(idx(rng));
    if (static_cast<int>(!(i - j).is_integer()) != parity) j += h;
    std::vector<Scalar> c(m + 1);
    for (auto& x : c) x = Scalar(coef(rng));
    a.add_entry(i, j, Jet(c));
  }
  return a;
}
}  // namespace

TEST_CASE("cocycle examples") {
  CHECK(gl_cocycle(E(1, 0), E(0, 1)) == Jet(0, Scalar(-1)));
  CHECK(gl_cocycle(E(h, 0), E(0, h)) == Jet(0, Scalar(1)));
  CHECK(gl_cocycle(E(2, 1), E(1, 2)).is_zero());
  CHECK(glinf_bracket(E(1, 0), E(0, 1)).central() == Jet(0, Scalar(-1)));
  CHECK_THROWS_AS(glinf_bracket(E(1, 0, 1), E(0, 1, 0)), MathError);
}

TEST_CASE("supertrace") {
  CHECK(gl_str(E(0, 0)) == one());
  CHECK(gl_str(E(h, h)) == -one());
  CHECK(gl_str(E(0, 1)).is_zero());
}

TEST_CASE("sector map") {
  CHECK(sector_map(3, 5, Sector::k22) == GlIndex{HalfInt(3) - h, HalfInt(5) - h});
  CHECK(sector_map(3, 5, Sector::k12) == GlIndex{HalfInt(3), HalfInt(5) - h});
  CHECK(sector_map(3, 5, Sector::k11) == GlIndex{HalfInt(3), HalfInt(5)});
  CHECK(sector_map(3, 5, Sector::k21) == GlIndex{HalfInt(3) - h, HalfInt(5)});
  // sector_map transports the product of M(1|1)
  for (Sector a : kAllSectors)
    for (Sector b : kAllSectors) {
      GlInfElement lhs = gl_matmul(GlInfElement::unit(sector_map(1, 2, a).first, sector_map(1, 2, a).second, one()),
                                   GlInfElement::unit(sector_map(2, 4, b).first, sector_map(2, 4, b).second, one()));
      GlInfElement rhs(0);
      if (sector_col(a) == sector_row(b)) {
        auto ij = sector_map(1, 4, make_sector(sector_row(a), sector_col(b)));
        rhs = GlInfElement::unit(ij.first, ij.second, one());
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("principal degree") {
  CHECK(principal_degree(E(0, 1)).begin()->first == HalfInt(1));
  CHECK(principal_degree(E(h, 0)).begin()->first == -h);
  GlInfElement c(0);
  c.add_central(one());
  CHECK(principal_degree(c).begin()->first == HalfInt(0));
}

TEST_CASE("super Jacobi and antisymmetry in the extension") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    std::size_t m = static_cast<std::size_t>(round % 3);
    int px = round % 2, py = (round / 2) % 2, pz = (round / 4) % 2;
    GlInfElement x = random_element(rng, m, px), y = random_element(rng, m, py), z = random_element(rng, m, pz);
    int sxy = (px && py) ? -1 : 1;
    GlInfElement xy = glinf_bracket(x, y), yx = glinf_bracket(y, x);
    CHECK(xy == (sxy == 1 ? -yx : yx));
    GlInfElement lhs = glinf_bracket(x, glinf_bracket(y, z));
    GlInfElement rhs = glinf_bracket(glinf_bracket(x, y), z);
    GlInfElement third = glinf_bracket(y, glinf_bracket(x, z));
    rhs += sxy == 1 ? third : -third;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weights and quasifiniteness") {
  GlWeight zero = GlWeight::zero(0);
  auto r0 = gl_quasifinite(zero);
  CHECK(r0.quasifinite);
  CHECK(r0.violations.empty());

  GlWeight c1 = GlWeight::zero(0);
  c1.charges[0] = 1;
  auto r1 = gl_quasifinite(c1);
  CHECK(r1.quasifinite);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].k == h);

  GlWeight tails = GlWeight::zero(0);
  tails.ints[0].neg_tail = 1;
  tails.ints[0].pos_tail = 1;
  auto r2 = gl_quasifinite(tails);
  CHECK_FALSE(r2.quasifinite);
  CHECK(r2.tail_failures.size() == 2);

  GlWeight half = GlWeight::zero(0);
  half.halves[0].except[1] = 1;  // lambda_{1/2} = 1
  CHECK(half.label(0, h) == Scalar(1));
  auto r3 = gl_quasifinite(half);
  CHECK(r3.quasifinite);
  CHECK(r3.violations.size() == 2);
}

TEST_CASE("half diagonals") {
  HalfDiagonal a{0, one(), one(), {}};
  CHECK(gl_nondegenerate(a));
  HalfDiagonal zero{0, Jet(0), one(), {}};
  CHECK_FALSE(gl_nondegenerate(zero));
  HalfDiagonal nil{1, Jet({Scalar(0), Scalar(1)}), one(1), {}};
  CHECK_FALSE(gl_nondegenerate(nil));

  CHECK(gl_g0a(a).at(HalfInt(5)) == 0);
  HalfDiagonal ex{1, one(1), one(1), {{HalfInt(0), Jet({Scalar(0), Scalar(1)})}}};
  CHECK(HalfDiagonalIdeals::ideal_str(gl_g0a(ex).at(HalfInt(0)), 1) == "(t)");
  HalfDiagonal ex0{1, one(1), one(1), {{HalfInt(0), Jet(1)}}};
  CHECK(HalfDiagonalIdeals::ideal_str(gl_g0a(ex0).at(HalfInt(0)), 1) == "0");
}

TEST_CASE("windowed SP2") {
  std::mt19937_64 rng(5);
  for (int k2 : {1, 2, 3}) {
    HalfInt k = HalfInt::from_twice(k2);
    for (int round = 0; round < 10; ++round) {
      GlInfElement a(0);
      std::uniform_int_distribution<int> idx(-6, 6), coef(-2, 2);
      for (int t = 0; t < 3; ++t) {
        HalfInt i = HalfInt::from_twice(idx(rng));
        a.add_entry(i, i - k, Jet(0, Scalar(coef(rng))));
      }
      if (a.is_zero()) continue;
      CHECK(detected_by_half_brackets(a, k + HalfInt(1)));
    }
  }
}
