// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/superq.hpp"

#include "qsigma/errors.hpp"

namespace qsigma {

std::string sector_name(Sector s) {
  return "E" + std::to_string(sector_row(s)) + std::to_string(sector_col(s));
}

SuperQElement SuperQElement::term(long n, const Laurent& f, Sector sector) {
  SuperQElement x;
  x.add_term(n, sector, f);
  return x;
}

SuperQElement SuperQElement::central(const Scalar& c) {
  SuperQElement x;
  x.central_ = c;
  return x;
}

Laurent SuperQElement::coeff(long n, Sector sector) const {
  auto it = terms_.find(TermKey{n, sector});
  return it == terms_.end() ? Laurent() : it->second;
}

void SuperQElement::add_term(long n, Sector sector, const Laurent& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(TermKey{n, sector}, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SuperQElement::parity() const {
  bool even = has_central(), odd = false;
  for (const auto& [k, f] : terms_) (sector_parity(k.sector) ? odd : even) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

std::pair<SuperQElement, SuperQElement> SuperQElement::parity_split() const {
  SuperQElement even, odd;
  even.central_ = central_;
  for (const auto& [k, f] : terms_) (sector_parity(k.sector) ? odd : even).terms_.emplace(k, f);
  return {even, odd};
}

SuperQElement SuperQElement::without_central() const {
  SuperQElement r = *this;
  r.central_ = Scalar();
  return r;
}

SuperQElement SuperQElement::operator-() const {
  SuperQElement r = *this;
  for (auto& [k, f] : r.terms_) f = -f;
  r.central_ = -r.central_;
  return r;
}

SuperQElement& SuperQElement::operator+=(const SuperQElement& o) {
  for (const auto& [k, f] : o.terms_) add_term(k.n, k.sector, f);
  central_ += o.central_;
  return *this;
}

SuperQElement SuperQElement::operator+(const SuperQElement& o) const {
  SuperQElement r = *this;
  r += o;
  return r;
}

SuperQElement SuperQElement::operator-(const SuperQElement& o) const { return *this + (-o); }

SuperQElement SuperQElement::operator*(const Scalar& c) const {
  if (c.is_zero()) return SuperQElement();
  SuperQElement r = *this;
  for (auto& [k, f] : r.terms_) f = f * c;
  r.central_ *= c;
  return r;
}

std::string SuperQElement::str() const {
  std::string out;
  auto append = [&out](const std::string& t) {
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  };
  for (const auto& [k, f] : terms_) {
    std::string t = k.n == 0 ? "" : "z^" + std::to_string(k.n) + "*";
    std::string fs = f.str();
    if (fs == "1" || fs == "-1") {
      t = (fs == "-1" ? "-" : "") + t + sector_name(k.sector);
    } else {
      t += "(" + fs + ")*" + sector_name(k.sector);
    }
    append(t);
  }
  if (has_central()) {
    std::string cs = central_.str();
    if (cs == "1") {
      append("C");
    } else if (cs == "-1") {
      append("-C");
    } else if (central_.is_rational() && central_.rational_value()->get_den() == 1) {
      append(cs + "*C");
    } else {
      append("(" + cs + ")*C");
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const SuperQElement& x) { return os << x.str(); }

SuperQElement assoc_mul(const SuperQElement& x, const SuperQElement& y) {
  SuperQElement r;
  for (const auto& [kx, f] : x.terms()) {
    for (const auto& [ky, g] : y.terms()) {
      if (sector_col(kx.sector) != sector_row(ky.sector)) continue;
      // (z^m f(T))(z^k g(T)) = z^{m+k} f(q^k T) g(T)
      Laurent prod = scale_arg(f, Scalar::q(static_cast<std::int32_t>(ky.n))) * g;
      r.add_term(kx.n + ky.n, make_sector(sector_row(kx.sector), sector_col(ky.sector)), prod);
    }
  }
  return r;
}

namespace {

// (f(q^a w) g(q^b w))_0
Scalar shifted_pairing(const Laurent& f, long a, const Laurent& g, long b) {
  Scalar acc;
  for (const auto& [e, fc] : f.terms()) {
    Scalar gc = g.coeff(-e);
    if (gc.is_zero()) continue;
    acc += fc * gc * Scalar::q(static_cast<std::int32_t>(a * e - b * e));
  }
  return acc;
}

Scalar psi_terms(const TermKey& kx, const Laurent& f, const TermKey& ky, const Laurent& g) {
  if (kx.n + ky.n != 0 || kx.n == 0) return Scalar();
  if (kx.n < 0) {
    int sign = (sector_parity(kx.sector) && sector_parity(ky.sector)) ? 1 : -1;
    return psi_terms(ky, g, kx, f) * Scalar(sign);
  }
  int i = sector_row(kx.sector), j = sector_col(kx.sector);
  int k = sector_row(ky.sector), l = sector_col(ky.sector);
  if (k != j || i != l) return Scalar();
  long r = kx.n;
  Scalar sum;
  for (long m = 0; m < r; ++m) sum += shifted_pairing(f, -r + m, g, m);
  // -(-1)^i
  return i == 1 ? sum : -sum;
}

}  // namespace

Scalar psi(const SuperQElement& x, const SuperQElement& y) {
  Scalar acc;
  for (const auto& [kx, f] : x.terms())
    for (const auto& [ky, g] : y.terms()) acc += psi_terms(kx, f, ky, g);
  return acc;
}

SuperQElement superbracket(const SuperQElement& x, const SuperQElement& y) {
  auto [x0, x1] = x.parity_split();
  auto [y0, y1] = y.parity_split();
  SuperQElement r;
  const std::pair<const SuperQElement*, int> xs[] = {{&x0, 0}, {&x1, 1}};
  const std::pair<const SuperQElement*, int> ys[] = {{&y0, 0}, {&y1, 1}};
  for (const auto& [a, pa] : xs) {
    if (a->terms().empty()) continue;
    for (const auto& [b, pb] : ys) {
      if (b->terms().empty()) continue;
      r += assoc_mul(*a, *b);
      if (pa && pb)
        r += assoc_mul(*b, *a);
      else
        r -= assoc_mul(*b, *a);
      r += SuperQElement::central(psi(*a, *b));
    }
  }
  return r;
}

Scalar str0(const SuperQElement& x) {
  return const_term(x.coeff(0, Sector::k11)) - const_term(x.coeff(0, Sector::k22));
}

SuperQElement sigma(const SuperQElement& x) {
  SuperQElement r = SuperQElement::central(x.central());
  for (const auto& [k, f] : x.terms()) r.add_term(k.n, k.sector, scale_arg(f, Scalar::q()));
  return r;
}

HalfInt principal_degree_of(const TermKey& key) {
  switch (key.sector) {
    case Sector::k12:
      return HalfInt(key.n) + HalfInt::half();
    case Sector::k21:
      return HalfInt(key.n) - HalfInt::half();
    default:
      return HalfInt(key.n);
  }
}

std::map<HalfInt, SuperQElement> grade_decompose(const SuperQElement& x) {
  std::map<HalfInt, SuperQElement> out;
  for (const auto& [k, f] : x.terms()) out[principal_degree_of(k)].add_term(k.n, k.sector, f);
  if (x.has_central()) out[HalfInt(0)] += SuperQElement::central(x.central());
  return out;
}

LoopVector act_on_superline(const SuperQElement& x, const LoopVector& v) {
  if (x.has_central()) throw MathError("the loop module carries no central action");
  LoopVector out;
  for (const auto& [basis, coeff] : v) {
    for (const auto& [k, f] : x.terms()) {
      if (sector_col(k.sector) != basis.component) continue;
      Scalar value = Scalar();
      for (const auto& [e, c] : f.terms()) value += c * Scalar::q(static_cast<std::int32_t>(e * basis.k));
      value *= coeff;
      if (value.is_zero()) continue;
      LoopBasis target{basis.k + k.n, sector_row(k.sector)};
      auto [it, inserted] = out.emplace(target, value);
      if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace qsigma
