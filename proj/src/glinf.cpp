// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/glinf.hpp"

#include <algorithm>

#include "qsigma/errors.hpp"

namespace qsigma {

GlInfElement GlInfElement::unit(HalfInt i, HalfInt j, const Jet& value) {
  GlInfElement a(value.order());
  a.add_entry(i, j, value);
  return a;
}

Jet GlInfElement::entry(HalfInt i, HalfInt j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Jet(order_) : it->second;
}

void GlInfElement::add_entry(HalfInt i, HalfInt j, const Jet& value) {
  if (value.order() != order_) throw MathError("jet order mismatch");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.emplace(GlIndex{i, j}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void GlInfElement::add_central(const Jet& value) { central_ += value; }

int GlInfElement::parity() const {
  bool even = !central_.is_zero(), odd = false;
  for (const auto& [ij, v] : entries_) (is_even_index(ij) ? even : odd) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

std::pair<GlInfElement, GlInfElement> GlInfElement::parity_split() const {
  GlInfElement even(order_), odd(order_);
  even.central_ = central_;
  for (const auto& [ij, v] : entries_) (is_even_index(ij) ? even : odd).entries_.emplace(ij, v);
  return {even, odd};
}

void GlInfElement::check_order(const GlInfElement& o) const {
  if (o.order_ != order_) throw MathError("gl element order mismatch");
}

GlInfElement GlInfElement::operator-() const {
  GlInfElement r = *this;
  for (auto& [ij, v] : r.entries_) v = -v;
  r.central_ = -r.central_;
  return r;
}

GlInfElement& GlInfElement::operator+=(const GlInfElement& o) {
  check_order(o);
  for (const auto& [ij, v] : o.entries_) add_entry(ij.first, ij.second, v);
  central_ += o.central_;
  return *this;
}

GlInfElement GlInfElement::operator+(const GlInfElement& o) const {
  GlInfElement r = *this;
  r += o;
  return r;
}

GlInfElement GlInfElement::operator-(const GlInfElement& o) const { return *this + (-o); }

bool GlInfElement::operator==(const GlInfElement& o) const {
  return order_ == o.order_ && entries_ == o.entries_ && central_ == o.central_;
}

std::string GlInfElement::str() const {
  std::string out;
  auto append = [&out](const std::string& t) { out += out.empty() ? t : " + " + t; };
  for (const auto& [ij, v] : entries_)
    append("(" + v.str() + ")*E[" + ij.first.str() + "," + ij.second.str() + "]");
  if (!central_.is_zero()) append("(" + central_.str() + ")*C");
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const GlInfElement& a) { return os << a.str(); }

GlInfElement gl_matmul(const GlInfElement& a, const GlInfElement& b) {
  if (a.order() != b.order()) throw MathError("gl element order mismatch");
  // Index b by row for the contraction.
  std::map<HalfInt, std::vector<std::pair<HalfInt, const Jet*>>> rows;
  for (const auto& [ij, v] : b.entries()) rows[ij.first].emplace_back(ij.second, &v);
  GlInfElement r(a.order());
  for (const auto& [ij, v] : a.entries()) {
    auto it = rows.find(ij.second);
    if (it == rows.end()) continue;
    for (const auto& [k, w] : it->second) r.add_entry(ij.first, k, v * *w);
  }
  return r;
}

Jet gl_str(const GlInfElement& a) {
  Jet acc(a.order());
  for (const auto& [ij, v] : a.entries()) {
    if (ij.first != ij.second) continue;
    acc += ij.first.is_integer() ? v : -v;
  }
  return acc;
}

Jet gl_cocycle(const GlInfElement& a, const GlInfElement& b) {
  if (a.order() != b.order()) throw MathError("gl element order mismatch");
  Jet acc(a.order());
  for (const auto& [ij, v] : a.entries()) {
    const auto& [r, c] = ij;
    int chi = (r <= HalfInt(0) ? 1 : 0) - (c <= HalfInt(0) ? 1 : 0);
    if (chi == 0) continue;
    Jet w = b.entry(c, r);
    if (w.is_zero()) continue;
    Jet term = v * w;
    if (!r.is_integer()) term = -term;
    acc += chi > 0 ? term : -term;
  }
  return acc;
}

GlInfElement glinf_bracket(const GlInfElement& a, const GlInfElement& b) {
  if (a.order() != b.order()) throw MathError("gl element order mismatch");
  auto [a0, a1] = a.parity_split();
  auto [b0, b1] = b.parity_split();
  GlInfElement r(a.order());
  const std::pair<const GlInfElement*, int> as[] = {{&a0, 0}, {&a1, 1}};
  const std::pair<const GlInfElement*, int> bs[] = {{&b0, 0}, {&b1, 1}};
  for (const auto& [x, px] : as) {
    if (x->entries().empty()) continue;
    for (const auto& [y, py] : bs) {
      if (y->entries().empty()) continue;
      r += gl_matmul(*x, *y);
      if (px && py)
        r += gl_matmul(*y, *x);
      else
        r -= gl_matmul(*y, *x);
      r.add_central(gl_cocycle(*x, *y));
    }
  }
  return r;
}

GlIndex sector_map(long i, long j, Sector sector) {
  const HalfInt half = HalfInt::half();
  switch (sector) {
    case Sector::k11:
      return {HalfInt(i), HalfInt(j)};
    case Sector::k22:
      return {HalfInt(i) - half, HalfInt(j) - half};
    case Sector::k12:
      return {HalfInt(i), HalfInt(j) - half};
    case Sector::k21:
      return {HalfInt(i) - half, HalfInt(j)};
  }
  return {};
}

std::map<HalfInt, GlInfElement> principal_degree(const GlInfElement& a) {
  std::map<HalfInt, GlInfElement> out;
  for (const auto& [ij, v] : a.entries()) {
    auto it = out.try_emplace(ij.second - ij.first, a.order()).first;
    it->second.add_entry(ij.first, ij.second, v);
  }
  if (!a.central().is_zero()) out.try_emplace(HalfInt(0), a.order()).first->second.add_central(a.central());
  return out;
}

Scalar LabelSequence::at(long k) const {
  auto it = except.find(k);
  if (it != except.end()) return it->second;
  return k <= 0 ? neg_tail : pos_tail;
}

GlWeight GlWeight::zero(std::size_t order) {
  GlWeight w;
  w.order = order;
  w.charges.assign(order + 1, Scalar());
  w.ints.assign(order + 1, LabelSequence{});
  w.halves.assign(order + 1, LabelSequence{});
  return w;
}

Scalar GlWeight::label(std::size_t l, HalfInt k) const {
  if (k.is_integer()) return ints.at(l).at(k.floor());
  return halves.at(l).at(k.ceil());  // k = ceil(k) - 1/2
}

Scalar GlWeight::relation(std::size_t l, HalfInt k) const {
  Scalar v = label(l, k) + label(l, k - HalfInt::half());
  if (k == HalfInt::half()) v += charges.at(l);
  return v;
}

std::pair<HalfInt, HalfInt> GlWeight::exception_window() const {
  // Exceptions at integer key k touch positions k (integer family) or
  // k - 1/2 (half family); the relations they enter are at that position
  // and the next half step. The tails meet between 0 and 1/2.
  HalfInt lo(0), hi(1);
  auto widen = [&](HalfInt pos) {
    lo = std::min(lo, pos);
    hi = std::max(hi, pos + HalfInt::half());
  };
  for (std::size_t l = 0; l <= order; ++l) {
    for (const auto& [k, v] : ints[l].except) widen(HalfInt(k));
    for (const auto& [k, v] : halves[l].except) widen(HalfInt(k) - HalfInt::half());
  }
  return {lo, hi};
}

GlQuasifiniteReport gl_quasifinite(const GlWeight& w) {
  GlQuasifiniteReport rep;
  for (std::size_t l = 0; l <= w.order; ++l) {
    if (!(w.ints[l].neg_tail + w.halves[l].neg_tail).is_zero()) rep.tail_failures.emplace_back(l, -1);
    if (!(w.ints[l].pos_tail + w.halves[l].pos_tail).is_zero()) rep.tail_failures.emplace_back(l, +1);
  }
  rep.quasifinite = rep.tail_failures.empty();
  auto [lo, hi] = w.exception_window();
  for (std::size_t l = 0; l <= w.order; ++l) {
    for (HalfInt k = lo; k <= hi; k += HalfInt::half()) {
      Scalar v = w.relation(l, k);
      if (!v.is_zero()) rep.violations.push_back({l, k, v});
    }
  }
  return rep;
}

Jet HalfDiagonal::at(HalfInt j) const {
  auto it = except.find(j);
  if (it != except.end()) return it->second;
  return j.is_integer() ? int_default : half_default;
}

GlInfElement HalfDiagonal::window(HalfInt lo, HalfInt hi) const {
  GlInfElement a(order);
  for (HalfInt j = lo; j <= hi; j += HalfInt::half()) a.add_entry(j + HalfInt::half(), j, at(j));
  return a;
}

bool gl_nondegenerate(const HalfDiagonal& a) {
  return a.int_default.is_nonzero_constant() && a.half_default.is_nonzero_constant();
}

namespace {

std::size_t valuation(const Jet& j) {
  for (std::size_t i = 0; i <= j.order(); ++i)
    if (!j[i].is_zero()) return i;
  return j.order() + 1;
}

}  // namespace

std::size_t HalfDiagonalIdeals::at(HalfInt j) const {
  auto it = except.find(j);
  if (it != except.end()) return it->second;
  return j.is_integer() ? int_default : half_default;
}

std::string HalfDiagonalIdeals::ideal_str(std::size_t v, std::size_t order) {
  if (v > order) return "0";
  if (v == 0) return "(1)";
  if (v == 1) return "(t)";
  return "(t^" + std::to_string(v) + ")";
}

HalfDiagonalIdeals gl_g0a(const HalfDiagonal& a) {
  HalfDiagonalIdeals r;
  r.order = a.order;
  r.int_default = valuation(a.int_default);
  r.half_default = valuation(a.half_default);
  for (const auto& [j, v] : a.except) r.except[j] = valuation(v);
  return r;
}

bool detected_by_half_brackets(const GlInfElement& a, HalfInt margin) {
  if (a.entries().empty()) return !a.central().is_zero();
  HalfInt lo = a.entries().begin()->first.first, hi = lo;
  for (const auto& [ij, v] : a.entries()) {
    lo = std::min({lo, ij.first, ij.second});
    hi = std::max({hi, ij.first, ij.second});
  }
  Jet one(a.order(), Scalar(1));
  for (HalfInt s = lo - margin; s <= hi + margin; s += HalfInt::half()) {
    if (!glinf_bracket(a, GlInfElement::unit(s - HalfInt::half(), s, one)).is_zero()) return true;
  }
  return false;
}

}  // namespace qsigma
