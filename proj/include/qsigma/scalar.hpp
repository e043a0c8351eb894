// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_SCALAR_HPP
#define QSIGMA_SCALAR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qsigma {

// Formal symbols of the scalar field. q is the deformation parameter, s the
// embedding parameter, L stands for log q; the rest are spare transcendentals
// for independent embedding points.
inline constexpr std::size_t kNumSymbols = 8;
inline constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {
    "q", "s", "L", "u", "v", "s1", "s2", "s3"};

enum Symbol : std::size_t { kQ = 0, kS = 1, kL = 2, kU = 3, kV = 4 };

std::optional<std::size_t> symbol_index(std::string_view name);

using Exponents = std::array<std::int32_t, kNumSymbols>;

struct Term {
  Exponents exp{};
  mpq_class coeff;
};

/// Multivariate polynomial over Q in the formal symbols.
///
/// Terms are kept sorted by decreasing lexicographic exponent order (symbol 0
/// most significant) with no zero coefficients, so structural equality is
/// polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(long c) : Poly(mpq_class(c)) {}
  static Poly monomial(const Exponents& e, const mpq_class& c = 1);
  static Poly variable(std::size_t index, std::int32_t power = 1);
  // Sorts and merges arbitrary terms into canonical form.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  std::int32_t degree_in(std::size_t var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpq_class& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact quotient, or nullopt when `divisor` does not divide *this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  // Scaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;
  Poly pow(unsigned e) const;

  // Coefficients as a univariate polynomial in `var`, index = degree.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients_in(std::size_t var, const std::vector<Poly>& coeffs);

  mpq_class evaluate_rational(const std::array<std::optional<mpq_class>, kNumSymbols>& at,
                              Poly* residual = nullptr) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;

  friend class Scalar;
};

// Monic greatest common divisor over Q[symbols].
Poly gcd(const Poly& a, const Poly& b);

/// Element of the rational function field Q(q, s, L, ...).
///
/// Stored as a reduced fraction whose denominator is monic; equality is
/// therefore structural.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT: implicit from integer literal
  Scalar(const mpq_class& v) : num_(v), den_(1) {}  // NOLINT
  explicit Scalar(const Poly& p) : num_(p), den_(1) {}
  // Throws MathError when den is zero.
  Scalar(const Poly& num, const Poly& den);

  static Scalar symbol(std::size_t index, std::int32_t power = 1);
  static Scalar q(std::int32_t power = 1) { return symbol(kQ, power); }
  static Scalar s(std::int32_t power = 1) { return symbol(kS, power); }
  static Scalar L(std::int32_t power = 1) { return symbol(kL, power); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  // Value when the scalar is a rational constant.
  std::optional<mpq_class> rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  // Throws MathError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text, e.g. "(q^2 - 1)/(2*q)". Parses back to the same value.
  std::string str() const;

  // Convenience numeric specialisation; symbols not listed stay formal.
  Scalar substitute(std::size_t symbol, const mpq_class& value) const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Total order on canonical forms; used only for deterministic container order.
bool canonical_less(const Scalar& a, const Scalar& b);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return canonical_less(a, b); }
};

/// k with a = q^k * b when a/b is exactly a power of q.
///
/// Throws MathError if either argument is zero.
std::optional<long> q_power_ratio(const Scalar& a, const Scalar& b);

std::string poly_str(const Poly& p);

}  // namespace qsigma

#endif  // QSIGMA_SCALAR_HPP
