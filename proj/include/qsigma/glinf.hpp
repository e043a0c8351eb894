// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_GLINF_HPP
#define QSIGMA_GLINF_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qsigma/half_int.hpp"
#include "qsigma/jet.hpp"
#include "qsigma/superq.hpp"

namespace qsigma {

using GlIndex = std::pair<HalfInt, HalfInt>;

/// Finitely supported matrix (a_ij), i, j in Z/2, with entries in R_m, plus
/// a central component in R_m.
class GlInfElement {
 public:
  using Map = std::map<GlIndex, Jet>;

  explicit GlInfElement(std::size_t order = 0) : order_(order), central_(order) {}
  static GlInfElement unit(HalfInt i, HalfInt j, const Jet& value);

  std::size_t order() const { return order_; }
  const Map& entries() const { return entries_; }
  const Jet& central() const { return central_; }
  Jet entry(HalfInt i, HalfInt j) const;
  bool is_zero() const { return entries_.empty() && central_.is_zero(); }

  void add_entry(HalfInt i, HalfInt j, const Jet& value);
  void add_central(const Jet& value);

  // 0 / 1 when homogeneous, -1 when mixed; E_ij is even iff i - j is an integer.
  int parity() const;
  std::pair<GlInfElement, GlInfElement> parity_split() const;

  GlInfElement operator-() const;
  GlInfElement operator+(const GlInfElement& o) const;
  GlInfElement operator-(const GlInfElement& o) const;
  GlInfElement& operator+=(const GlInfElement& o);
  GlInfElement& operator-=(const GlInfElement& o) { return *this += -o; }
  bool operator==(const GlInfElement& o) const;
  bool operator!=(const GlInfElement& o) const { return !(*this == o); }

  // e.g. "(1)*E[1,0] + (t)*E[1/2,0] + (1)*C"
  std::string str() const;

 private:
  void check_order(const GlInfElement& o) const;
  std::size_t order_;
  Map entries_;
  Jet central_;
};

std::ostream& operator<<(std::ostream& os, const GlInfElement& a);

inline bool is_even_index(const GlIndex& ij) { return (ij.first - ij.second).is_integer(); }

/// Matrix product of the non-central parts.
GlInfElement gl_matmul(const GlInfElement& a, const GlInfElement& b);

/// sum_r (-1)^{2r} a_rr.
Jet gl_str(const GlInfElement& a);

/// C(A, B) = Str([J, A] B) with J = sum_{r <= 0} E_rr, computed from
/// [J, A]_ab = (chi(a <= 0) - chi(b <= 0)) A_ab.
Jet gl_cocycle(const GlInfElement& a, const GlInfElement& b);

/// Supercommutator plus C(A, B) in the central slot. Throws MathError on an
/// order mismatch.
GlInfElement glinf_bracket(const GlInfElement& a, const GlInfElement& b);

/// Position of E_ij M_sector: M11 (i, j), M22 (i-1/2, j-1/2),
/// M12 (i, j-1/2), M21 (i-1/2, j).
GlIndex sector_map(long i, long j, Sector sector);

/// Decomposition by j - i; the central part sits in degree 0.
std::map<HalfInt, GlInfElement> principal_degree(const GlInfElement& a);

/// Two-sided eventually constant sequence over one index family. Positions
/// <= 0 carry neg_tail and positions > 0 carry pos_tail unless listed as
/// exceptions. For the half-integer family the key k stands for k - 1/2.
struct LabelSequence {
  Scalar neg_tail;
  Scalar pos_tail;
  std::map<long, Scalar> except;

  Scalar at(long k) const;
  bool operator==(const LabelSequence&) const = default;
};

/// Highest weight data: charges c_l = lambda(t^l) and, per l, the labels
/// lambda_k^{(l)} = lambda(t^l E_kk) on integer and half-integer positions.
struct GlWeight {
  std::size_t order = 0;
  std::vector<Scalar> charges;        // size order + 1
  std::vector<LabelSequence> ints;    // size order + 1
  std::vector<LabelSequence> halves;  // size order + 1

  static GlWeight zero(std::size_t order);
  // lambda_k^{(l)} for any k in Z/2.
  Scalar label(std::size_t l, HalfInt k) const;
  // lambda_k + lambda_{k-1/2} + delta_{k,1/2} c_l
  Scalar relation(std::size_t l, HalfInt k) const;
  // Smallest and largest k (in Z/2) whose relation may differ from the tail value.
  std::pair<HalfInt, HalfInt> exception_window() const;
  bool operator==(const GlWeight&) const = default;
};

struct GlViolation {
  std::size_t l;
  HalfInt k;
  Scalar value;
};

struct GlQuasifiniteReport {
  bool quasifinite = false;
  // Relations failing inside the exception window; only meaningful (finite)
  // when quasifinite.
  std::vector<GlViolation> violations;
  // Sides whose tail relation fails, as (l, side) with side -1 or +1.
  std::vector<std::pair<std::size_t, int>> tail_failures;
};

/// The relation lambda_k + lambda_{k-1/2} + delta_{k,1/2} c_l = 0 fails for
/// only finitely many k, for every l.
GlQuasifiniteReport gl_quasifinite(const GlWeight& w);

/// a = sum_j a_j(t) E_{j+1/2, j}: defaults for integer and half-integer j,
/// with finitely many exceptions.
struct HalfDiagonal {
  std::size_t order = 0;
  Jet int_default;
  Jet half_default;
  std::map<HalfInt, Jet> except;

  Jet at(HalfInt j) const;
  // Finite-support restriction to j in [lo, hi].
  GlInfElement window(HalfInt lo, HalfInt hi) const;
};

/// a_j is a nonzero constant for all but finitely many j.
bool gl_nondegenerate(const HalfDiagonal& a);

/// Principal ideal (a_j) of R_m at each position, stored as the t-adic
/// valuation v (the ideal is (t^v); v = m + 1 means the zero ideal).
struct HalfDiagonalIdeals {
  std::size_t order = 0;
  std::size_t int_default = 0;
  std::size_t half_default = 0;
  std::map<HalfInt, std::size_t> except;

  std::size_t at(HalfInt j) const;
  // "(1)", "(t)", "(t^2)" or "0".
  static std::string ideal_str(std::size_t valuation, std::size_t order);
};

HalfDiagonalIdeals gl_g0a(const HalfDiagonal& a);

/// Windowed form of SP2: true when some bracket with E_{s-1/2, s}, s ranging
/// over the support of `a` widened by `margin`, is nonzero.
bool detected_by_half_brackets(const GlInfElement& a, HalfInt margin);

}  // namespace qsigma

#endif  // QSIGMA_GLINF_HPP
