// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/quasipoly.hpp"

#include <algorithm>
#include <utility>

#include "qsigma/errors.hpp"

namespace qsigma {

QuasiPolynomial QuasiPolynomial::term(const Scalar& base, const UPoly& p) {
  QuasiPolynomial r;
  r.add_term(base, p);
  return r;
}

UPoly QuasiPolynomial::poly(const Scalar& base) const {
  auto it = terms_.find(base);
  return it == terms_.end() ? UPoly() : it->second;
}

void QuasiPolynomial::add_term(const Scalar& base, const UPoly& p) {
  if (base.is_zero()) throw MathError("quasipolynomial base must be nonzero");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(base, p);
  if (!inserted) {
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuasiPolynomial QuasiPolynomial::operator-() const {
  QuasiPolynomial r = *this;
  for (auto& [b, p] : r.terms_) p = -p;
  return r;
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  for (const auto& [b, p] : o.terms_) add_term(b, p);
  return *this;
}

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& o) const {
  QuasiPolynomial r = *this;
  r += o;
  return r;
}

QuasiPolynomial QuasiPolynomial::operator-(const QuasiPolynomial& o) const { return *this + (-o); }

std::string QuasiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [b, p] : terms_) {
    if (!first) out += "; ";
    first = false;
    out += b.str() + ": " + p.str();
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const QuasiPolynomial& p) { return os << p.str(); }

Scalar qp_eval(const QuasiPolynomial& p, long n) {
  Scalar acc;
  for (const auto& [b, poly] : p.terms()) acc += poly.evaluate(Scalar(n)) * b.pow(n);
  return acc;
}

UPoly min_annihilator(const QuasiPolynomial& p) {
  UPoly r = UPoly::constant(1);
  for (const auto& [b, poly] : p.terms())
    for (long i = 0; i <= poly.degree(); ++i) r = r * UPoly::linear_factor(b);
  return r;
}

bool annihilates_window(const UPoly& b, const QuasiPolynomial& p, long window) {
  if (p.is_zero()) return true;
  long deg = b.degree();
  if (deg < 0) return false;
  // Values P(n) for n in [-window, window + deg], computed once.
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(2 * window + deg + 1));
  for (long n = -window; n <= window + deg; ++n) values.push_back(qp_eval(p, n));
  for (long n = -window; n <= window; ++n) {
    Scalar acc;
    for (long k = 0; k <= deg; ++k)
      acc += b.coeff(static_cast<std::size_t>(k)) * values[static_cast<std::size_t>(n + window + k)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

QuasiPolynomial scale_bases(const QuasiPolynomial& p, const Scalar& c) {
  if (c.is_zero()) throw MathError("scale_bases by zero");
  QuasiPolynomial r;
  for (const auto& [b, poly] : p.terms()) r.add_term(b * c, poly);
  return r;
}

std::vector<CongruenceClass> congruence_classes(const std::vector<Scalar>& bases) {
  // Group by q-power ratio against the first member of each group.
  std::vector<std::vector<std::pair<long, Scalar>>> groups;
  for (const auto& b : bases) {
    bool placed = false;
    for (auto& g : groups) {
      if (auto k = q_power_ratio(b, g.front().second)) {
        if (std::none_of(g.begin(), g.end(), [&](const auto& e) { return e.second == b; }))
          g.emplace_back(*k, b);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({{0, b}});
  }
  std::vector<CongruenceClass> out;
  for (auto& g : groups) {
    long top = std::max_element(g.begin(), g.end(), [](const auto& a, const auto& b) {
                 return a.first < b.first;
               })->first;
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    CongruenceClass c;
    c.representative = g.front().second;
    for (const auto& [k, b] : g) {
      c.shifts.push_back(top - k);
      c.members.push_back(b);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CongruenceClass& a, const CongruenceClass& b) {
    return canonical_less(a.representative, b.representative);
  });
  return out;
}

std::vector<CongruenceClass> congruence_classes(const QuasiPolynomial& p) {
  std::vector<Scalar> bases;
  for (const auto& [b, poly] : p.terms()) bases.push_back(b);
  return congruence_classes(bases);
}

Scalar jet_at_zero(const QuasiPolynomial& p, const Scalar& base, std::size_t l) {
  mpz_class fact = 1;
  for (std::size_t i = 2; i <= l; ++i) fact *= static_cast<unsigned long>(i);
  return p.poly(base).coeff(l) * Scalar(mpq_class(fact));
}

namespace {

// Connection polynomial 1 + c_1 x + ... + c_len x^len of the shortest
// recurrence s_n + c_1 s_{n-1} + ... = 0.
std::pair<std::vector<Scalar>, std::size_t> berlekamp_massey(const std::vector<Scalar>& seq) {
  std::vector<Scalar> c{Scalar(1)}, b{Scalar(1)};
  std::size_t len = 0, shift = 1;
  Scalar last_disc = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Scalar d = seq[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * seq[n - i];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    std::vector<Scalar> prev = c;
    Scalar factor = d / last_disc;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= factor * b[i];
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(prev);
      last_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1);
  return {c, len};
}

// Roots of a squarefree polynomial taken from the monomial terms of its root
// sum, repeated on the deflated polynomial until no new root appears.
std::optional<std::vector<Scalar>> monomial_roots(UPoly g) {
  std::vector<Scalar> roots;
  while (g.degree() > 0) {
    g = g.monic();
    if (g.degree() == 1) {
      roots.push_back(-g.coeff(0));
      break;
    }
    Scalar sum = -g.coeff(static_cast<std::size_t>(g.degree() - 1));
    if (sum.denominator().size() != 1) return std::nullopt;
    bool found = false;
    for (const auto& t : sum.numerator().terms()) {
      Scalar cand(Poly::monomial(t.exp, t.coeff), sum.denominator());
      if (!g.evaluate(cand).is_zero()) continue;
      roots.push_back(cand);
      g = g.divmod(UPoly::linear_factor(cand)).first;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

// Solves the square system a x = rhs exactly; nullopt when singular.
std::optional<std::vector<Scalar>> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    Scalar inv = a[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

}  // namespace

std::optional<QuasiPolynomial> interpolate_finite(const std::map<long, Scalar>& data, std::size_t max_order) {
  if (data.empty()) return QuasiPolynomial();
  long lo = data.begin()->first, hi = data.rbegin()->first;
  std::vector<Scalar> seq;
  for (long n = lo; n <= hi; ++n) {
    auto it = data.find(n);
    seq.push_back(it == data.end() ? Scalar() : it->second);
  }
  if (std::all_of(seq.begin(), seq.end(), [](const Scalar& x) { return x.is_zero(); })) return QuasiPolynomial();

  auto [conn, len] = berlekamp_massey(seq);
  if (len > max_order || 2 * len > seq.size()) return std::nullopt;
  // Characteristic polynomial x^len + c_1 x^{len-1} + ... + c_len.
  std::vector<Scalar> chi(len + 1);
  for (std::size_t i = 0; i <= len; ++i) chi[len - i] = conn[i];
  UPoly charpoly(chi);
  if (charpoly.coeff(0).is_zero()) return std::nullopt;

  UPoly squarefree = charpoly.divmod(gcd(charpoly, charpoly.derivative())).first;
  auto roots = monomial_roots(squarefree);
  if (!roots) return std::nullopt;

  // Multiplicity of each root, then the coefficients of n^j b^n.
  std::vector<std::pair<Scalar, std::size_t>> basis;
  for (const auto& r : *roots) {
    UPoly rest = charpoly;
    std::size_t mult = 0;
    for (;;) {
      auto [quot, rem] = rest.divmod(UPoly::linear_factor(r));
      if (!rem.is_zero()) break;
      ++mult;
      rest = quot;
    }
    for (std::size_t j = 0; j < mult; ++j) basis.emplace_back(r, j);
  }
  std::size_t k = basis.size();
  std::vector<std::vector<Scalar>> a(k, std::vector<Scalar>(k));
  std::vector<Scalar> rhs(k);
  for (std::size_t row = 0; row < k; ++row) {
    long n = lo + static_cast<long>(row);
    for (std::size_t col = 0; col < k; ++col)
      a[row][col] = Scalar(n).pow(static_cast<long>(basis[col].second)) * basis[col].first.pow(n);
    rhs[row] = seq[row];
  }
  auto sol = solve(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;

  QuasiPolynomial result;
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<Scalar> c(basis[col].second + 1);
    c.back() = (*sol)[col];
    result.add_term(basis[col].first, UPoly(std::move(c)));
  }
  for (long n = lo; n <= hi; ++n)
    if (qp_eval(result, n) != seq[static_cast<std::size_t>(n - lo)]) return std::nullopt;
  return result;
}

}  // namespace qsigma
