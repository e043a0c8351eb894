// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/random.hpp"

#include <vector>

namespace qsigma {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Scalar Sampler::scalar() {
  Scalar c(integer(-2, 2));
  switch (integer(0, 5)) {
    case 0:
      return c * Scalar::q();
    case 1:
      return c * Scalar::q(-1);
    case 2:
      return c * Scalar::s();
    default:
      return c;
  }
}

Laurent Sampler::laurent(long lo, long hi, int terms) {
  Laurent f;
  long n = integer(1, terms);
  for (long i = 0; i < n; ++i) f += Laurent::monomial(integer(lo, hi), scalar());
  return f;
}

SuperQElement Sampler::element(int parity, long n_lo, long n_hi, bool central) {
  SuperQElement x;
  long n = integer(1, 2);
  for (long i = 0; i < n; ++i) {
    Sector sec = parity ? (coin() ? Sector::k12 : Sector::k21) : (coin() ? Sector::k11 : Sector::k22);
    x.add_term(integer(n_lo, n_hi), sec, laurent(-3, 3));
  }
  if (parity == 0 && central && coin()) x += SuperQElement::central(Scalar(integer(-2, 2)));
  return x;
}

SuperQElement Sampler::any_element() {
  SuperQElement x;
  long n = integer(0, 4);
  for (long i = 0; i < n; ++i) {
    Laurent f;
    long t = integer(1, 3);
    for (long j = 0; j < t; ++j) {
      Scalar c = scalar() / Scalar(integer(1, 3));
      if (coin()) c += Scalar::q(static_cast<std::int32_t>(integer(-2, 2))) * Scalar(integer(-1, 1));
      f += Laurent::monomial(integer(-3, 3), c);
    }
    x.add_term(integer(-3, 3), kAllSectors[static_cast<std::size_t>(integer(0, 3))], f);
  }
  if (coin()) x += SuperQElement::central(Scalar(integer(-3, 3)) / Scalar(integer(1, 4)));
  return x;
}

QuasiPolynomial Sampler::quasipolynomial(int bases, int deg) {
  static const std::vector<Scalar> pool = {Scalar(1),      Scalar(-1),     Scalar(2),
                                           Scalar::q(),    Scalar::q(2),   Scalar::q(-1),
                                           Scalar::s(),    Scalar::s() / Scalar::q(),
                                           Scalar::s() * Scalar::q(), Scalar::symbol(kU)};
  QuasiPolynomial p;
  long n = integer(1, bases);
  for (long i = 0; i < n; ++i) {
    const Scalar& b = pool[static_cast<std::size_t>(integer(0, static_cast<long>(pool.size()) - 1))];
    std::vector<Scalar> c(static_cast<std::size_t>(integer(0, deg)) + 1);
    for (auto& v : c) v = Scalar(integer(-3, 3));
    if (c.back().is_zero()) c.back() = Scalar(1);
    p.add_term(b, UPoly(c));
  }
  return p;
}

ModuleDescriptor Sampler::descriptor(const Scalar& s, std::size_t m) {
  ModuleDescriptor d{s, m, GlWeight::zero(m)};
  for (std::size_t l = 0; l <= m; ++l) {
    d.weight.charges[l] = Scalar(integer(-2, 2));
    for (auto* seq : {&d.weight.ints[l], &d.weight.halves[l]}) {
      long n = integer(0, 3);
      for (long t = 0; t < n; ++t) {
        Scalar v(integer(-2, 2));
        if (!v.is_zero()) seq->except[integer(-2, 3)] = v;
      }
    }
  }
  return d;
}

GlWeight Sampler::gl_weight(std::size_t m) {
  GlWeight w = GlWeight::zero(m);
  for (std::size_t l = 0; l <= m; ++l) {
    w.charges[l] = Scalar(integer(-2, 2));
    for (int side = 0; side < 2; ++side) {
      Scalar a(integer(-2, 2));
      Scalar b = integer(0, 9) < 7 ? -a : Scalar(integer(-2, 2));
      (side ? w.ints[l].pos_tail : w.ints[l].neg_tail) = a;
      (side ? w.halves[l].pos_tail : w.halves[l].neg_tail) = b;
    }
    for (auto* seq : {&w.ints[l], &w.halves[l]}) {
      long n = integer(0, 3);
      for (long t = 0; t < n; ++t) seq->except[integer(-4, 4)] = Scalar(integer(-2, 2));
    }
  }
  return w;
}

}  // namespace qsigma
