// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_UPOLY_HPP
#define QSIGMA_UPOLY_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qsigma/scalar.hpp"

namespace qsigma {

/// Dense univariate polynomial over the scalar field, ascending coefficients.
/// No trailing zero coefficients are stored; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> ascending);
  static UPoly constant(const Scalar& c) { return UPoly({c}); }
  // x - root
  static UPoly linear_factor(const Scalar& root) { return UPoly({-root, Scalar(1)}); }
  static UPoly x_power(std::size_t n);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(); }
  const Scalar& leading() const { return c_.back(); }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Scalar& c) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  // Quotient and remainder; throws MathError for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;
  Scalar evaluate(const Scalar& x) const;

  // Printed in `var`, descending degree, e.g. "x^2 - 2*x + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

// Shared by the Laurent and univariate printers. A printed scalar is a
// summand when it has no top-level sum, and atomic when it is also free of
// quotients, so it can multiply a monomial without parentheses.
bool coefficient_is_summand(const std::string& text);
bool coefficient_is_atomic(const std::string& text);

}  // namespace qsigma

#endif  // QSIGMA_UPOLY_HPP
