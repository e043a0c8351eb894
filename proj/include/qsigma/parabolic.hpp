// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_PARABOLIC_HPP
#define QSIGMA_PARABOLIC_HPP

#include <map>
#include <optional>

#include "qsigma/classifier.hpp"
#include "qsigma/half_int.hpp"
#include "qsigma/laurent.hpp"
#include "qsigma/superq.hpp"

namespace qsigma {

/// d = z^{-1} b12(T) M12 + b21(T) M21, an element of degree -1/2.
struct HalfElement {
  Laurent b12;
  Laurent b21;

  bool is_zero() const { return b12.is_zero() && b21.is_zero(); }
  SuperQElement element() const;
};

/// Degree -k part of the minimal parabolic containing d: one ideal generator
/// per sector (normalised as in ideal_gcd, zero for the zero ideal). Integer
/// depths use M11 and M22, the others M12 and M21.
struct ParabolicSlice {
  HalfInt depth;
  std::map<Sector, Laurent> generators;

  Laurent generator(Sector s) const;
};

/// The element [f M12 + z g M21, d] of g_0^d, written out:
/// f b21 I + g(T/q) b12 M22 + b12(qT) g M11 - (g(T/q) b12)_0 C.
SuperQElement g0a_element(const HalfElement& d, const Laurent& f, const Laurent& g);

/// Slices of p^d down to depth k (k in {1/2, 1, ..., 3}) by bracket closure:
/// degree-zero brackets T^n M_ii (|n| <= window) separate the sectors, and
/// p_{-k-1/2} = [p_{-1/2}, p_{-k}]. Throws MathError for d = 0 or k out of range.
ParabolicSlice min_parabolic_slice(const HalfElement& d, HalfInt k, long window = 2);

/// d != 0, checked as: each nonzero sector of d generates a nonzero (hence
/// finite-codimension) ideal of F[w, w^-1].
bool is_nondegenerate(const HalfElement& d);

struct SingularReport {
  bool singular = false;
  // First probe with a nonzero pairing: f = T^n (from_f) or g = T^n.
  std::optional<long> failing_exponent;
  bool failing_from_f = false;
  Scalar failing_value;
};

/// lambda(g0a_element(d, T^s, 0)) = lambda(g0a_element(d, 0, T^r)) = 0 for
/// |s|, |r| <= K; by linearity this covers every f, g with exponents in range.
SingularReport singular_vector_check(const WeightFunctional& w, const HalfElement& d, long K = 8);
SingularReport singular_vector_check(const SSqWeight& w, const HalfElement& d, long K = 8);

}  // namespace qsigma

#endif  // QSIGMA_PARABOLIC_HPP
