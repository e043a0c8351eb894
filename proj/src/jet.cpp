// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/jet.hpp"

#include <algorithm>

#include "qsigma/errors.hpp"
#include "qsigma/upoly.hpp"

namespace qsigma {

Jet::Jet(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

void Jet::check_order(const Jet& o) const {
  if (o.order() != order()) throw MathError("jet order mismatch");
}

bool Jet::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Jet::is_nonzero_constant() const {
  if (c_[0].is_zero()) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Jet Jet::operator+(const Jet& o) const {
  check_order(o);
  Jet r = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += o.c_[j];
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  check_order(o);
  Jet r = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] -= o.c_[j];
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  check_order(o);
  Jet r(order());
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b < c_.size(); ++b) {
      if (o.c_[b].is_zero()) continue;
      r.c_[a + b] += c_[a] * o.c_[b];
    }
  }
  return r;
}

Jet Jet::operator*(const Scalar& c) const {
  Jet r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::string Jet::str() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    std::string cs = c_[j].str();
    std::string tj = j == 0 ? "" : j == 1 ? "t" : "t^" + std::to_string(j);
    bool plain = j == 0 ? coefficient_is_summand(cs) : coefficient_is_atomic(cs);
    bool neg = plain && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string body;
    if (j == 0) {
      body = plain ? cs : "(" + cs + ")";
    } else if (plain && cs == "1") {
      body = tj;
    } else {
      body = (plain ? cs : "(" + cs + ")") + "*" + tj;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Jet& j) { return os << j.str(); }

Jet jet_exp(long k, std::size_t order) {
  Jet r(order);
  Scalar kl = Scalar(k) * Scalar::L();
  Scalar term = 1;
  for (std::size_t j = 0; j <= order; ++j) {
    r[j] = term;
    term = term * kl / Scalar(static_cast<long>(j + 1));
  }
  return r;
}

}  // namespace qsigma
