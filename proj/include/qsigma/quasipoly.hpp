// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_QUASIPOLY_HPP
#define QSIGMA_QUASIPOLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsigma/scalar.hpp"
#include "qsigma/upoly.hpp"

namespace qsigma {

/// n -> sum_b p_b(n) b^n over finitely many distinct nonzero bases b.
class QuasiPolynomial {
 public:
  using Map = std::map<Scalar, UPoly, ScalarLess>;

  QuasiPolynomial() = default;
  // Throws MathError for a zero base.
  static QuasiPolynomial term(const Scalar& base, const UPoly& p);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // p_b, or zero when b is not a base.
  UPoly poly(const Scalar& base) const;

  void add_term(const Scalar& base, const UPoly& p);
  QuasiPolynomial operator-() const;
  QuasiPolynomial operator+(const QuasiPolynomial& o) const;
  QuasiPolynomial operator-(const QuasiPolynomial& o) const;
  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  bool operator==(const QuasiPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const QuasiPolynomial& o) const { return !(*this == o); }

  // e.g. "{q: 1; 1: x + 2}" in canonical base order; "0" when empty.
  std::string str() const;

 private:
  Map terms_;
};

std::ostream& operator<<(std::ostream& os, const QuasiPolynomial& p);

Scalar qp_eval(const QuasiPolynomial& p, long n);

/// prod_b (x - b)^{deg p_b + 1}; the constant 1 for the zero quasipolynomial.
UPoly min_annihilator(const QuasiPolynomial& p);

/// sum_k b_k P(n + k) = 0 for every |n| <= window.
bool annihilates_window(const UPoly& b, const QuasiPolynomial& p, long window);

/// Bases multiplied by c, so the value at n gains a factor c^n.
QuasiPolynomial scale_bases(const QuasiPolynomial& p, const Scalar& c);

/// One class of bases related by integer powers of q. The representative has
/// the largest q-power; every member is representative * q^{-shift}.
struct CongruenceClass {
  Scalar representative;
  std::vector<long> shifts;     // ascending, starts at 0
  std::vector<Scalar> members;  // members[i] = representative * q^{-shifts[i]}
};

std::vector<CongruenceClass> congruence_classes(const std::vector<Scalar>& bases);
std::vector<CongruenceClass> congruence_classes(const QuasiPolynomial& p);

/// (d/dx)^l p_b at 0.
Scalar jet_at_zero(const QuasiPolynomial& p, const Scalar& base, std::size_t l);

/// Recovers a quasipolynomial from values on a contiguous window of n.
///
/// A shortest linear recurrence is found by Berlekamp-Massey; its roots are
/// searched among the monomial terms of the root sum, so only bases that are
/// monomials in the symbols times rationals are found. Returns nullopt when
/// no recurrence of order <= max_order exists on the data, when the
/// recurrence has a zero root (finitely supported data), or when the roots
/// cannot be recovered. A returned value reproduces every data point.
std::optional<QuasiPolynomial> interpolate_finite(const std::map<long, Scalar>& data,
                                                  std::size_t max_order = 16);

}  // namespace qsigma

#endif  // QSIGMA_QUASIPOLY_HPP
