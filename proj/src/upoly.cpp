// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/upoly.hpp"

#include <algorithm>

#include "qsigma/errors.hpp"

namespace qsigma {

UPoly::UPoly(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }

UPoly UPoly::x_power(std::size_t n) {
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Scalar& k) const {
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= k;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  UPoly rem = *this;
  if (degree() < d.degree()) return {UPoly(), rem};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - d.degree()) + 1);
  Scalar inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    Scalar f = rem.leading() * inv;
    quot[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= f * d.c_[i];
    rem.c_.back() = Scalar();  // exact cancellation of the leading term
    rem.trim();
  }
  return {UPoly(std::move(quot)), rem};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Scalar> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UPoly(std::move(c));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool coefficient_is_summand(const std::string& text) {
  // Only signs outside parentheses split the text into summands.
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (i > 0 && depth == 0 && (text[i] == '+' || text[i] == '-')) return false;
  }
  return true;
}

bool coefficient_is_atomic(const std::string& text) {
  return coefficient_is_summand(text) && text.find('/') == std::string::npos;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
    std::string cs = c.str();
    bool neg = false;
    std::string body;
    if (mono.empty()) {
      if (coefficient_is_summand(cs) && cs[0] == '-') {
        neg = true;
        body = cs.substr(1);
      } else {
        body = coefficient_is_summand(cs) ? cs : "(" + cs + ")";
      }
    } else if (c.is_one()) {
      body = mono;
    } else if (cs == "-1") {
      neg = true;
      body = mono;
    } else if (coefficient_is_atomic(cs)) {
      if (cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      body = cs + "*" + mono;
    } else {
      body = "(" + cs + ")*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

}  // namespace qsigma
