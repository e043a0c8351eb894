// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qsigma/errors.hpp"

namespace qsigma {

std::optional<std::size_t> symbol_index(std::string_view name) {
  for (std::size_t i = 0; i < kNumSymbols; ++i)
    if (kSymbolNames[i] == name) return i;
  return std::nullopt;
}

namespace {

// Descending lexicographic order.
int compare_exp(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kNumSymbols; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kNumSymbols; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kNumSymbols; ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_exp(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

// Merge two sorted term lists, combining like terms; sign applies to b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : compare_exp(a[i].exp, b[j].exp);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(negate_b ? Term{b[j].exp, -b[j].coeff} : b[j]);
      ++j;
    } else {
      mpq_class v = negate_b ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
      if (sgn(v) != 0) out.push_back(Term{a[i].exp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Exponents{}, c});
}

Poly Poly::monomial(const Exponents& e, const mpq_class& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{e, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly r;
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

Poly Poly::variable(std::size_t index, std::int32_t power) {
  Exponents e{};
  e[index] = power;
  return monomial(e);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_[0].exp));
}

bool Poly::is_one() const {
  return terms_.size() == 1 && is_zero_exp(terms_[0].exp) && terms_[0].coeff == 1;
}

std::int32_t Poly::degree_in(std::size_t var) const {
  std::int32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return compare_exp(a.exp, b.exp) < 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && compare_exp(out.back().exp, t.exp) == 0) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms_ = std::move(out);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_ = merge(terms_, o.terms_, false);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.terms_ = merge(terms_, o.terms_, true);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  if (o.size() == 1) {
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{exp_add(t.exp, o.terms_[0].exp), t.coeff * o.terms_[0].coeff});
    return r;  // order preserved under multiplication by a monomial
  }
  if (size() == 1) return o * *this;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back(Term{exp_add(a.exp, b.exp), a.coeff * b.coeff});
  r.canonicalize();
  return r;
}

Poly Poly::operator*(const mpq_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw MathError("polynomial division by zero");
  Poly quotient;
  if (is_zero()) return quotient;
  const Term& lead = divisor.leading();
  if (divisor.size() == 1) {
    for (const auto& t : terms_) {
      if (!divides(lead.exp, t.exp)) return std::nullopt;
      quotient.terms_.push_back(Term{exp_sub(t.exp, lead.exp), t.coeff / lead.coeff});
    }
    return quotient;
  }
  // deg_v(quotient) = deg_v(*this) - deg_v(divisor) for every symbol v.
  Exponents bound{};
  for (std::size_t v = 0; v < kNumSymbols; ++v) {
    bound[v] = degree_in(v) - divisor.degree_in(v);
    if (bound[v] < 0) return std::nullopt;
  }
  Poly rem = *this;
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading();
    if (!divides(lead.exp, rt.exp)) return std::nullopt;
    for (std::size_t v = 0; v < kNumSymbols; ++v)
      if (rt.exp[v] - lead.exp[v] > bound[v]) return std::nullopt;
    Poly t = monomial(exp_sub(rt.exp, lead.exp), rt.coeff / lead.coeff);
    qterms.push_back(t.terms_[0]);
    rem = rem - divisor * t;
  }
  quotient.terms_ = std::move(qterms);  // generated in decreasing order
  return quotient;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading().coeff;
  return *this * inv;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> coeffs(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    u.exp[var] = 0;
    coeffs[static_cast<std::size_t>(t.exp[var])].terms_.push_back(std::move(u));
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

Poly Poly::from_coefficients_in(std::size_t var, const std::vector<Poly>& coeffs) {
  Poly r;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].terms_) {
      Term u = t;
      u.exp[var] += static_cast<std::int32_t>(d);
      r.terms_.push_back(std::move(u));
    }
  }
  r.canonicalize();
  return r;
}

mpq_class Poly::evaluate_rational(const std::array<std::optional<mpq_class>, kNumSymbols>& at,
                                  Poly* residual) const {
  // Full evaluation when all symbols that occur are assigned; otherwise the
  // partially evaluated polynomial goes to `residual`.
  Poly partial;
  for (const auto& t : terms_) {
    Term u = t;
    for (std::size_t i = 0; i < kNumSymbols; ++i) {
      if (at[i] && u.exp[i] != 0) {
        mpq_class p = 1;
        for (std::int32_t k = 0; k < u.exp[i]; ++k) p *= *at[i];
        u.coeff *= p;
        u.exp[i] = 0;
      }
    }
    partial.terms_.push_back(std::move(u));
  }
  partial.canonicalize();
  if (residual) *residual = partial;
  if (partial.is_constant()) return partial.is_zero() ? mpq_class(0) : partial.leading().coeff;
  return 0;
}

namespace {

Poly content_in(const std::vector<Poly>& coeffs) {
  Poly g;
  for (const auto& c : coeffs) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Divides out the polynomial content and the rational content, so that
// the coefficients are integral with no common integer factor.
std::vector<Poly> primitive_part(const std::vector<Poly>& coeffs) {
  Poly c = content_in(coeffs);
  std::vector<Poly> out;
  out.reserve(coeffs.size());
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& p : coeffs) {
    out.push_back(*p.divide_exact(c));
    for (const auto& t : out.back().terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  if (num_gcd != 0 && (num_gcd != 1 || den_lcm != 1)) {
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& p : out) p = p * scale;
  }
  return out;
}

void trim(std::vector<Poly>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder of a by b (both univariate with polynomial coefficients),
// up to a factor lc(b)^e which the caller discards with the content.
std::vector<Poly> pseudo_remainder(std::vector<Poly> a, const std::vector<Poly>& b) {
  const Poly& lb = b.back();
  trim(a);
  while (a.size() >= b.size()) {
    Poly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  Exponents e = a.leading().exp;
  auto fold = [&e](const Poly& p) {
    for (const auto& t : p.terms())
      for (std::size_t i = 0; i < kNumSymbols; ++i) e[i] = std::min(e[i], t.exp[i]);
  };
  fold(a);
  fold(b);
  return Poly::monomial(e);
}

// Heuristic gcd by evaluation at large integers (Char, Geddes and Gonnet),
// recursive over the symbols. Inputs have integer coefficients. Returns
// nullopt when no evaluation point worked; callers then fall back to PRS.
mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

// Divides out the integer content and makes the leading coefficient positive.
Poly integer_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class c = integer_content(p);
  if (sgn(p.leading().coeff) < 0) c = -c;
  mpq_class inv(mpz_class(1), c);
  inv.canonicalize();
  return p * inv;
}

Poly evaluate_at(const Poly& p, std::size_t var, const mpz_class& x) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(t.exp[var]));
    u.coeff *= mpq_class(pw);
    u.exp[var] = 0;
    out.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(out));
}

// Reconstructs the polynomial in `var` whose value at x is h, using
// symmetric x-adic digits of every coefficient.
Poly interpolate_at(Poly h, std::size_t var, const mpz_class& x) {
  std::vector<Term> out;
  mpz_class half = x / 2;
  for (std::int32_t i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digits, rest;
    for (const auto& t : h.terms()) {
      mpz_class c = t.coeff.get_num();
      mpz_class d;
      mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (d > half) d -= x;
      if (d != 0) {
        Term u = t;
        u.coeff = d;
        u.exp[var] = i;
        out.push_back(std::move(u));
      }
      mpz_class next = (c - d) / x;
      if (next != 0) rest.push_back(Term{t.exp, mpq_class(next)});
    }
    h = Poly::from_terms(std::move(rest));
  }
  return Poly::from_terms(std::move(out));
}

std::optional<Poly> heuristic_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return integer_primitive(g);
  if (g.is_zero()) return integer_primitive(f);
  std::size_t var = kNumSymbols;
  for (std::size_t v = 0; v < kNumSymbols && var == kNumSymbols; ++v)
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) var = v;
  if (var == kNumSymbols) {
    mpz_class a = f.leading().coeff.get_num(), b = g.leading().coeff.get_num();
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Poly(mpq_class(r));
  }
  mpz_class cf = integer_content(f), cg = integer_content(g), content;
  mpz_gcd(content.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  Poly ff = f * mpq_class(mpz_class(1), cf), gg = g * mpq_class(mpz_class(1), cg);
  mpz_class fn = max_norm(ff), gn = max_norm(gg);
  mpz_class bound = 2 * std::min(fn, gn) + 29;
  mpz_class root = sqrt(bound);
  mpz_class x = std::min(bound, mpz_class(99 * root));
  mpz_class lf = abs(ff.leading().coeff.get_num()), lg = abs(gg.leading().coeff.get_num());
  mpz_class alt = 2 * std::min(mpz_class(fn / lf), mpz_class(gn / lg)) + 4;
  if (alt > x) x = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly fe = evaluate_at(ff, var, x), ge = evaluate_at(gg, var, x);
    if (!fe.is_zero() && !ge.is_zero()) {
      if (auto he = heuristic_gcd(fe, ge)) {
        Poly h = integer_primitive(interpolate_at(*he, var, x));
        if (!h.is_zero() && ff.divide_exact(h) && gg.divide_exact(h)) return h * mpq_class(content);
        // Cofactor variants.
        for (const auto* pair : {&fe, &ge}) {
          auto cof_e = pair->divide_exact(*he);
          if (!cof_e) continue;
          Poly cof = interpolate_at(*cof_e, var, x);
          if (cof.is_zero()) continue;
          const Poly& whole = pair == &fe ? ff : gg;
          const Poly& other = pair == &fe ? gg : ff;
          if (auto hh = whole.divide_exact(cof)) {
            Poly cand = integer_primitive(*hh);
            if (other.divide_exact(cand)) return cand * mpq_class(content);
          }
        }
      }
    }
    mpz_class r2 = sqrt(sqrt(x));
    x = 73794 * x * r2 / 27011;
  }
  return std::nullopt;
}

// Scales a rational polynomial to integer coefficients.
Poly clear_denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return p * mpq_class(l);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.size() == 1 || b.size() == 1) return monomial_gcd(a, b);
  if (a == b) return a.monic();
  if (auto h = heuristic_gcd(clear_denominators(a), clear_denominators(b))) return h->monic();
  for (std::size_t v = 0; v < kNumSymbols; ++v) {
    std::int32_t da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 && db == 0) continue;
    if (da == 0) return gcd(a, content_in(b.coefficients_in(v)));
    if (db == 0) return gcd(content_in(a.coefficients_in(v)), b);
    auto ca = a.coefficients_in(v);
    auto cb = b.coefficients_in(v);
    Poly g_content = gcd(content_in(ca), content_in(cb));
    std::vector<Poly> x = primitive_part(ca);
    std::vector<Poly> y = primitive_part(cb);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      if (y.size() == 1) {  // remainder of degree 0 in v: primitive part is 1
        x = {Poly(1)};
        break;
      }
      std::vector<Poly> r = pseudo_remainder(x, y);
      x = std::move(y);
      y = r.empty() ? r : primitive_part(r);
    }
    x = primitive_part(x);
    return (g_content * Poly::from_coefficients_in(v, x)).monic();
  }
  return Poly(1);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw MathError("division by zero");
  normalize();
}

Scalar Scalar::symbol(std::size_t index, std::int32_t power) {
  if (power >= 0) return Scalar(Poly::variable(index, power));
  Scalar r;
  r.num_ = Poly(1);
  r.den_ = Poly::variable(index, -power);
  return r;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  mpq_class lc = den_.leading().coeff;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

std::optional<mpq_class> Scalar::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return num_.is_zero() ? mpq_class(0) : num_.leading().coeff;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Scalar r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  Poly g = gcd(den_, o.den_);
  Poly d1 = *den_.divide_exact(g);
  Poly d2 = *o.den_.divide_exact(g);
  r.num_ = num_ * d2 + o.num_ * d1;
  r.den_ = den_ * d2;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ * o.num_;
    return r;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  r.num_ = *num_.divide_exact(g1) * *o.num_.divide_exact(g2);
  r.den_ = *den_.divide_exact(g2) * *o.den_.divide_exact(g1);
  mpq_class lc = r.den_.leading().coeff;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  mpq_class lc = r.den_.leading().coeff;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;  // powers of coprime polynomials stay coprime
}

Scalar Scalar::substitute(std::size_t symbol, const mpq_class& value) const {
  std::array<std::optional<mpq_class>, kNumSymbols> at{};
  at[symbol] = value;
  Poly n, d;
  num_.evaluate_rational(at, &n);
  den_.evaluate_rational(at, &d);
  return Scalar(n, d);
}

namespace {

std::string monomial_str(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kSymbolNames[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string term_str(const Term& t, bool first) {
  std::string mono = monomial_str(t.exp);
  mpq_class c = t.coeff;
  bool neg = sgn(c) < 0;
  if (neg) c = -c;
  std::string body;
  if (mono.empty()) {
    body = c.get_str();
  } else if (c == 1) {
    body = mono;
  } else {
    body = c.get_str() + "*" + mono;
  }
  if (first) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}

// Product of symbol powers with coefficient 1, or an integer: printable
// without parentheses as a divisor.
bool is_atom(const Poly& p) {
  if (p.size() != 1) return false;
  const Term& t = p.leading();
  if (is_zero_exp(t.exp)) return t.coeff.get_den() == 1 && sgn(t.coeff) > 0;
  if (t.coeff != 1) return false;
  int vars = 0;
  for (auto x : t.exp) vars += x != 0;
  return vars == 1;
}

}  // namespace

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    out += term_str(t, first);
    first = false;
  }
  return out;
}

std::string Scalar::str() const {
  if (den_.is_one()) {
    // Rational coefficients print as a/b*monomial, which parses back unchanged.
    bool integral = std::all_of(num_.terms().begin(), num_.terms().end(),
                                [](const Term& t) { return t.coeff.get_den() == 1; });
    if (integral || num_.size() == 1) return poly_str(num_);
  }
  // Clear denominators jointly so both sides carry integer coefficients.
  mpz_class lcm = 1;
  for (const auto* p : {&num_, &den_})
    for (const auto& t : p->terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Poly n = num_ * mpq_class(lcm);
  Poly d = den_ * mpq_class(lcm);
  mpz_class g = 0;
  for (const auto* p : {&n, &d})
    for (const auto& t : p->terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  if (g != 1 && g != 0) {
    n = n * mpq_class(1, g);
    d = d * mpq_class(1, g);
  }
  std::string ns = poly_str(n);
  if (d.is_one()) return ns;
  if (n.size() > 1) ns = "(" + ns + ")";
  std::string ds = poly_str(d);
  if (!is_atom(d)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

int compare_poly(const Poly& a, const Poly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    int c = compare_exp(x[i].exp, y[i].exp);
    if (c != 0) return c;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool canonical_less(const Scalar& a, const Scalar& b) {
  int c = compare_poly(a.denominator(), b.denominator());
  if (c != 0) return c < 0;
  return compare_poly(a.numerator(), b.numerator()) < 0;
}

std::optional<long> q_power_ratio(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) throw MathError("q_power_ratio of zero");
  Scalar r = a / b;
  auto pure_q = [](const Poly& p) -> std::optional<long> {
    if (p.size() != 1 || p.leading().coeff != 1) return std::nullopt;
    const auto& e = p.leading().exp;
    for (std::size_t i = 0; i < kNumSymbols; ++i)
      if (i != kQ && e[i] != 0) return std::nullopt;
    return e[kQ];
  };
  auto n = pure_q(r.numerator());
  auto d = pure_q(r.denominator());
  if (!n || !d) return std::nullopt;
  return *n - *d;
}

}  // namespace qsigma
