// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_JET_HPP
#define QSIGMA_JET_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "qsigma/scalar.hpp"

namespace qsigma {

/// Element of R_m = F[t]/(t^{m+1}) over the scalar field F.
class Jet {
 public:
  // Zero of order m.
  explicit Jet(std::size_t order = 0) : c_(order + 1) {}
  Jet(std::size_t order, const Scalar& constant) : c_(order + 1) { c_[0] = constant; }
  // Coefficients c_0..c_m; the order is coeffs.size() - 1.
  explicit Jet(std::vector<Scalar> coeffs);

  std::size_t order() const { return c_.size() - 1; }
  const Scalar& operator[](std::size_t j) const { return c_[j]; }
  Scalar& operator[](std::size_t j) { return c_[j]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero() const;
  // Nonzero element of F (degree 0 in t).
  bool is_nonzero_constant() const;

  Jet operator-() const;
  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator*(const Scalar& c) const;
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }

  bool operator==(const Jet& o) const { return c_ == o.c_; }
  bool operator!=(const Jet& o) const { return !(*this == o); }

  // e.g. "s/q + (L*s/q)*t"
  std::string str() const;

 private:
  void check_order(const Jet& o) const;
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Jet& j);

/// q^{kt} in R_m: sum_{j<=m} (kL)^j t^j / j!.
Jet jet_exp(long k, std::size_t order);

}  // namespace qsigma

#endif  // QSIGMA_JET_HPP
