// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_EMBEDDING_HPP
#define QSIGMA_EMBEDDING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsigma/glinf.hpp"
#include "qsigma/superq.hpp"

namespace qsigma {

/// One diagonal of phi_s^{[m]}(z^k f(T_q) M_sector): the entry at
/// sector_map(j - k, j, sector) is f(s q^{-j + t}) mod t^{m+1}, j in Z.
struct Strand {
  long k = 0;
  Sector sector = Sector::k11;
  Laurent f;

  // Column minus row on this diagonal.
  HalfInt offset() const;
  int parity() const { return sector_parity(sector); }
};

/// Banded infinite matrix over R_m given by strands, plus a central part.
class BandedOperator {
 public:
  BandedOperator(Scalar s, std::size_t order) : s_(std::move(s)), order_(order), central_(order) {}

  const Scalar& s() const { return s_; }
  std::size_t order() const { return order_; }
  const std::vector<Strand>& strands() const { return strands_; }
  const Jet& central() const { return central_; }

  void add_strand(const Strand& st) { strands_.push_back(st); }
  void add_central(const Jet& c) { central_ += c; }

  // Entry of a single strand at (i, j); zero off its diagonal.
  Jet strand_entry(const Strand& st, HalfInt i, HalfInt j) const;
  Jet entry(HalfInt i, HalfInt j) const;
  // Nonzero entries with both indices in [lo, hi].
  std::map<GlIndex, Jet> entries_in(HalfInt lo, HalfInt hi) const;
  // Same entries as a finite gl element (central part included).
  GlInfElement truncate(HalfInt lo, HalfInt hi) const;

 private:
  Scalar s_;
  std::size_t order_;
  std::vector<Strand> strands_;
  Jet central_;
};

/// Dense block of entries over the indices lo, lo + 1/2, ..., hi.
struct DenseWindow {
  std::vector<HalfInt> index;
  std::vector<std::vector<Jet>> rows;
  Jet central;

  // Fixed-width text grid with half-integer row and column labels.
  std::string str() const;
};

DenseWindow window(const BandedOperator& op, HalfInt lo, HalfInt hi);

/// phi_s^{[m]}; throws MathError for an element with a central part.
BandedOperator phi(const SuperQElement& x, const Scalar& s, std::size_t order);

/// phi-hat: C -> 1 and z^0 T^k M_ii (k != 0) gains the central term
/// -(-1)^i s^k / (1 - q^k) q^{kt}.
BandedOperator phi_hat(const SuperQElement& x, const Scalar& s, std::size_t order);

/// Entries of the supercommutator of two banded operators inside
/// [lo, hi]^2, central part from C(A, B). Every entry is an exact finite sum.
GlInfElement banded_bracket(const BandedOperator& a, const BandedOperator& b, HalfInt lo, HalfInt hi);

/// C(A, B) = Str([J, A] B) for banded operators; a finite sum.
Jet banded_cocycle(const BandedOperator& a, const BandedOperator& b);

/// Vector of the superline module: coefficients of v_i, i in Z/2.
using SuperLineVector = std::map<HalfInt, Scalar>;

/// Action on v_i = t^{-i+a}, v_{i-1/2} = t^{-i+a} theta at m = 0, straight
/// from the defining formulas. Throws MathError for a central element.
SuperLineVector module_action(const SuperQElement& x, const Scalar& s, const SuperLineVector& v);

/// Matrix of op applied to a vector (finite sum per row).
SuperLineVector apply_window(const BandedOperator& op, const SuperLineVector& v);

struct KernelReport {
  bool in_kernel = false;
  // First nonzero entry found on the scan j = 0, 1, -1, 2, -2, ...
  std::optional<GlIndex> witness;
  std::optional<Jet> witness_value;
};

/// x lies in the kernel of phi_s^{[m]} (for formal s only x = 0 does).
KernelReport kernel_test(const SuperQElement& x, const Scalar& s, std::size_t order);

/// phi-hat at several points. Throws MathError when two points differ by a
/// power of q.
std::vector<BandedOperator> phi_multi(const SuperQElement& x, const std::vector<Scalar>& points,
                                      const std::vector<std::size_t>& orders);

}  // namespace qsigma

#endif  // QSIGMA_EMBEDDING_HPP
