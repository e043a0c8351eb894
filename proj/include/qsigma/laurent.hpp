// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_LAURENT_HPP
#define QSIGMA_LAURENT_HPP

#include <map>
#include <ostream>
#include <span>
#include <string>

#include "qsigma/jet.hpp"
#include "qsigma/scalar.hpp"
#include "qsigma/upoly.hpp"

namespace qsigma {

/// Laurent polynomial in one variable w (printed as T, standing for T_q).
class Laurent {
 public:
  using Map = std::map<long, Scalar>;

  Laurent() = default;
  Laurent(const Scalar& c);  // NOLINT: constants embed implicitly
  static Laurent monomial(long exponent, const Scalar& c = Scalar(1));
  // sum_i p_i w^{i + shift}
  static Laurent from_upoly(const UPoly& p, long shift = 0);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long exponent) const;
  long min_exponent() const { return terms_.begin()->first; }
  long max_exponent() const { return terms_.rbegin()->first; }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Scalar& c) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Ordinary polynomial w^{-min} * f (requires f != 0).
  UPoly shifted_to_polynomial() const;

  std::string str() const;

 private:
  void add_term(long e, const Scalar& c);
  Map terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& f);

/// f(c w). Throws MathError when c is zero.
Laurent scale_arg(const Laurent& f, const Scalar& c);

/// Coefficient of w^0.
Scalar const_term(const Laurent& f);

/// f(c q^t) in R_m. Throws MathError when c is zero.
Jet jet_eval(const Laurent& f, const Scalar& c, std::size_t order);

/// Generator of the ideal spanned by `fs` in F[w, w^-1], normalised to a monic
/// polynomial with nonzero constant term. Zero for the zero ideal.
Laurent ideal_gcd(std::span<const Laurent> fs);

}  // namespace qsigma

#endif  // QSIGMA_LAURENT_HPP
