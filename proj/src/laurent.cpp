// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/laurent.hpp"

#include "qsigma/errors.hpp"

namespace qsigma {

Laurent::Laurent(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Laurent Laurent::monomial(long exponent, const Scalar& c) {
  Laurent f;
  if (!c.is_zero()) f.terms_.emplace(exponent, c);
  return f;
}

Laurent Laurent::from_upoly(const UPoly& p, long shift) {
  Laurent f;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeffs()[i].is_zero()) f.terms_.emplace(static_cast<long>(i) + shift, p.coeffs()[i]);
  return f;
}

Scalar Laurent::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

void Laurent::add_term(long e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::operator*(const Scalar& k) const {
  if (k.is_zero()) return Laurent();
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

UPoly Laurent::shifted_to_polynomial() const {
  if (is_zero()) return UPoly();
  long lo = min_exponent();
  std::vector<Scalar> c(static_cast<std::size_t>(max_exponent() - lo) + 1);
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e - lo)] = v;
  return UPoly(std::move(c));
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long e = it->first;
    const Scalar& c = it->second;
    std::string mono = e == 0 ? "" : e == 1 ? "T" : "T^" + std::to_string(e);
    std::string cs = c.str();
    bool neg = false;
    std::string body;
    bool atomic = coefficient_is_atomic(cs);
    bool summand = coefficient_is_summand(cs);
    if ((mono.empty() ? summand : atomic) && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (mono.empty()) {
      body = summand ? cs : "(" + cs + ")";
    } else if (atomic && cs == "1") {
      body = mono;
    } else {
      body = (atomic ? cs : "(" + cs + ")") + "*" + mono;
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

std::ostream& operator<<(std::ostream& os, const Laurent& f) { return os << f.str(); }

Laurent scale_arg(const Laurent& f, const Scalar& c) {
  if (c.is_zero()) throw MathError("argument scaling by zero is not invertible");
  if (c.is_one()) return f;
  Laurent r;
  for (const auto& [e, v] : f.terms()) r += Laurent::monomial(e, v * c.pow(e));
  return r;
}

Scalar const_term(const Laurent& f) { return f.coeff(0); }

Jet jet_eval(const Laurent& f, const Scalar& c, std::size_t order) {
  if (c.is_zero()) throw MathError("jet evaluation at zero");
  Jet r(order);
  for (const auto& [e, v] : f.terms()) r += jet_exp(e, order) * (v * c.pow(e));
  return r;
}

Laurent ideal_gcd(std::span<const Laurent> fs) {
  UPoly g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    g = gcd(g, f.shifted_to_polynomial());
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) return Laurent();
  // Strip the monomial unit: divide out powers of w.
  std::size_t low = 0;
  while (g.coeffs()[low].is_zero()) ++low;
  std::vector<Scalar> c(g.coeffs().begin() + static_cast<long>(low), g.coeffs().end());
  return Laurent::from_upoly(UPoly(std::move(c)).monic());
}

}  // namespace qsigma
