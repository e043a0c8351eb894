// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/parabolic.hpp"

#include <vector>

#include "qsigma/errors.hpp"

namespace qsigma {

SuperQElement HalfElement::element() const {
  SuperQElement x;
  x.add_term(-1, Sector::k12, b12);
  x.add_term(0, Sector::k21, b21);
  return x;
}

Laurent ParabolicSlice::generator(Sector s) const {
  auto it = generators.find(s);
  return it == generators.end() ? Laurent() : it->second;
}

SuperQElement g0a_element(const HalfElement& d, const Laurent& f, const Laurent& g) {
  Scalar q = Scalar::q();
  Laurent fb = f * d.b21;
  Laurent g_shift = scale_arg(g, q.inverse()) * d.b12;
  SuperQElement x;
  x.add_term(0, Sector::k11, fb + scale_arg(d.b12, q) * g);
  x.add_term(0, Sector::k22, fb + g_shift);
  return x + SuperQElement::central(-const_term(g_shift));
}

namespace {

// z-power of the sector-s component in degree -k.
long z_degree(HalfInt k, Sector s) {
  switch (s) {
    case Sector::k12:
      return -(k + HalfInt::half()).floor();
    case Sector::k21:
      return -(k - HalfInt::half()).floor();
    default:
      return -k.floor();
  }
}

std::vector<Sector> sectors_at(HalfInt k) {
  if (k.is_integer()) return {Sector::k11, Sector::k22};
  return {Sector::k12, Sector::k21};
}

// Multiples T^n g of each generator, placed at degree -k.
std::vector<SuperQElement> spanning_set(const ParabolicSlice& slice, long window) {
  std::vector<SuperQElement> out;
  for (Sector s : sectors_at(slice.depth)) {
    Laurent g = slice.generator(s);
    if (g.is_zero()) continue;
    for (long n = -window; n <= window; ++n)
      out.push_back(SuperQElement::term(z_degree(slice.depth, s), Laurent::monomial(n) * g, s));
  }
  return out;
}

// Sector projections of a spanning set at degree -k, reduced to generators.
// The slice is stable under degree-zero brackets, which separate sectors
// so the projections generate each sector ideal.
ParabolicSlice reduce(const std::vector<SuperQElement>& span, HalfInt k) {
  ParabolicSlice slice{k, {}};
  for (Sector s : sectors_at(k)) {
    std::vector<Laurent> parts;
    for (const auto& x : span) {
      Laurent f = x.coeff(z_degree(k, s), s);
      if (!f.is_zero()) parts.push_back(f);
    }
    Laurent g = ideal_gcd(parts);
    if (!g.is_zero()) slice.generators[s] = g;
  }
  return slice;
}

}  // namespace

ParabolicSlice min_parabolic_slice(const HalfElement& d, HalfInt k, long window) {
  if (d.is_zero()) throw MathError("the minimal parabolic needs a nonzero element");
  if (k < HalfInt::half() || k > HalfInt(3)) throw MathError("slice depth must lie in 1/2 .. 3");

  // p_{-1/2}: d and its brackets with the degree-zero generators T^n M_ii.
  SuperQElement x = d.element();
  std::vector<SuperQElement> span{x};
  for (long n = -window; n <= window; ++n)
    for (Sector s : {Sector::k11, Sector::k22})
      span.push_back(superbracket(SuperQElement::term(0, Laurent::monomial(n), s), x));
  ParabolicSlice half = reduce(span, HalfInt::half());

  ParabolicSlice cur = half;
  std::vector<SuperQElement> half_span = spanning_set(half, window);
  while (cur.depth < k) {
    std::vector<SuperQElement> next;
    for (const auto& a : half_span)
      for (const auto& b : spanning_set(cur, window)) next.push_back(superbracket(a, b));
    cur = reduce(next, cur.depth + HalfInt::half());
  }
  return cur;
}

bool is_nondegenerate(const HalfElement& d) {
  if (d.is_zero()) return false;
  for (const Laurent* b : {&d.b12, &d.b21}) {
    if (b->is_zero()) continue;
    if (ideal_gcd(std::span<const Laurent>(b, 1)).is_zero()) return false;
  }
  return true;
}

SingularReport singular_vector_check(const WeightFunctional& w, const HalfElement& d, long K) {
  SingularReport rep;
  for (long n = -K; n <= K; ++n) {
    for (bool from_f : {true, false}) {
      Laurent t = Laurent::monomial(n);
      Scalar v = w.evaluate(from_f ? g0a_element(d, t, Laurent()) : g0a_element(d, Laurent(), t));
      if (!v.is_zero()) {
        rep.failing_exponent = n;
        rep.failing_from_f = from_f;
        rep.failing_value = v;
        return rep;
      }
    }
  }
  rep.singular = true;
  return rep;
}

SingularReport singular_vector_check(const SSqWeight& w, const HalfElement& d, long K) {
  return singular_vector_check(WeightFunctional(w), d, K);
}

}  // namespace qsigma
