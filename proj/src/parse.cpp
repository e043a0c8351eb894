// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/parse.hpp"

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "qsigma/errors.hpp"

namespace qsigma {
namespace {

constexpr int kNoSector = -1;

// Intermediate value: a sum of z^n f(T) [M_ij] plus a central multiple.
struct Expr {
  std::map<std::pair<long, int>, Laurent> terms;
  Scalar central;

  static Expr scalar(const Scalar& c) {
    Expr e;
    if (!c.is_zero()) e.terms[{0, kNoSector}] = Laurent(c);
    return e;
  }

  void add(long n, int sector, const Laurent& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::make_pair(n, sector), f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty() && central.is_zero(); }

  std::optional<Scalar> as_scalar() const {
    if (!central.is_zero()) return std::nullopt;
    if (terms.empty()) return Scalar();
    if (terms.size() != 1) return std::nullopt;
    const auto& [key, f] = *terms.begin();
    if (key.first != 0 || key.second != kNoSector) return std::nullopt;
    if (f.terms().size() != 1 || f.terms().begin()->first != 0) return std::nullopt;
    return f.terms().begin()->second;
  }
};

Expr negate(const Expr& a) {
  Expr r;
  for (const auto& [k, f] : a.terms) r.terms.emplace(k, -f);
  r.central = -a.central;
  return r;
}

Expr add(const Expr& a, const Expr& b) {
  Expr r = a;
  for (const auto& [k, f] : b.terms) r.add(k.first, k.second, f);
  r.central += b.central;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_sum() {
    skip_ws();
    Expr acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      Expr t = parse_product();
      acc = add(acc, neg ? negate(t) : t);
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Expr parse_product() {
    Expr acc = parse_unary();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, parse_unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = parse_unary();
        auto s = d.as_scalar();
        if (!s) fail_at("division by a non-scalar", at);
        if (s->is_zero()) fail_at("division by zero", at);
        acc = multiply(acc, Expr::scalar(s->inverse()));
      } else {
        return acc;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return negate(parse_unary());
    return parse_power();
  }

  long parse_exponent() {
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  Expr parse_power() {
    std::size_t at = pos_;
    Expr base = parse_primary();
    if (!accept('^')) return base;
    long e = parse_exponent();
    return power(base, e, at);
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected operand");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::scalar(Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      return identifier(name, start);
    }
    fail("expected operand");
  }

  Expr identifier(const std::string& name, std::size_t at) const {
    Expr e;
    if (name == "z") {
      e.terms[{1, kNoSector}] = Laurent(Scalar(1));
    } else if (name == "T") {
      e.terms[{0, kNoSector}] = Laurent::monomial(1);
    } else if (name == "C") {
      e.central = 1;
    } else if (name.size() == 3 && name[0] == 'E' && (name[1] == '1' || name[1] == '2') &&
               (name[2] == '1' || name[2] == '2')) {
      e.terms[{0, static_cast<int>(make_sector(name[1] - '0', name[2] - '0'))}] = Laurent(Scalar(1));
    } else if (auto idx = symbol_index(name)) {
      e = Expr::scalar(Scalar::symbol(*idx));
    } else {
      fail_at("unknown symbol '" + name + "'", at);
    }
    return e;
  }

  Expr multiply(const Expr& a, const Expr& b) const {
    if (!a.central.is_zero() || !b.central.is_zero()) {
      auto sa = a.as_scalar(), sb = b.as_scalar();
      Expr r;
      if (!a.central.is_zero() && !b.central.is_zero()) fail("product of central elements");
      if (!a.central.is_zero()) {
        if (!sb || !a.terms.empty()) fail("C may only be scaled");
        r.central = a.central * *sb;
      } else {
        if (!sa || !b.terms.empty()) fail("C may only be scaled");
        r.central = b.central * *sa;
      }
      return r;
    }
    Expr r;
    for (const auto& [ka, f] : a.terms) {
      for (const auto& [kb, g] : b.terms) {
        int sector;
        if (ka.second == kNoSector) {
          sector = kb.second;
        } else if (kb.second == kNoSector) {
          sector = ka.second;
        } else {
          auto sa = static_cast<Sector>(ka.second), sb = static_cast<Sector>(kb.second);
          if (sector_col(sa) != sector_row(sb)) continue;
          sector = static_cast<int>(make_sector(sector_row(sa), sector_col(sb)));
        }
        Laurent prod = scale_arg(f, Scalar::q(static_cast<std::int32_t>(kb.first))) * g;
        r.add(ka.first + kb.first, sector, prod);
      }
    }
    return r;
  }

  Expr power(const Expr& base, long e, std::size_t at) const {
    if (auto s = base.as_scalar()) {
      if (s->is_zero() && e < 0) fail_at("division by zero", at);
      return Expr::scalar(s->pow(e));
    }
    Expr b = base;
    if (e < 0) {
      // Only monomials c z^a T^b without matrix unit are invertible here.
      if (!b.central.is_zero() || b.terms.size() != 1) fail_at("negative power of a non-monomial", at);
      const auto& [key, f] = *b.terms.begin();
      if (key.second != kNoSector || f.terms().size() != 1) fail_at("negative power of a non-monomial", at);
      long za = key.first;
      long tb = f.terms().begin()->first;
      Scalar c = f.terms().begin()->second;
      // (c z^a T^b)^{-1} = c^{-1} T^{-b} z^{-a} = c^{-1} q^{ab} z^{-a} T^{-b}
      Expr inv;
      inv.terms[{-za, kNoSector}] =
          Laurent::monomial(-tb, c.inverse() * Scalar::q(static_cast<std::int32_t>(za * tb)));
      b = inv;
      e = -e;
    }
    if (!b.central.is_zero() && e > 1) fail_at("power of a central element", at);
    Expr r = Expr::scalar(1);
    for (long i = 0; i < e; ++i) r = multiply(r, b);
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Expr e = Parser(text).parse_all();
  auto s = e.as_scalar();
  if (!s) throw ParseError("expected a scalar expression in q, s, L", 0);
  return *s;
}

Laurent parse_laurent(std::string_view text) {
  Expr e = Parser(text).parse_all();
  if (!e.central.is_zero()) throw ParseError("expected a Laurent polynomial in T", 0);
  Laurent f;
  for (const auto& [k, g] : e.terms) {
    if (k.first != 0 || k.second != kNoSector) throw ParseError("expected a Laurent polynomial in T", 0);
    f += g;
  }
  return f;
}

SuperQElement parse_element(std::string_view text) {
  Expr e = Parser(text).parse_all();
  SuperQElement x = SuperQElement::central(e.central);
  for (const auto& [k, f] : e.terms) {
    if (k.second == kNoSector) throw ParseError("term without matrix unit E11/E12/E21/E22", 0);
    x.add_term(k.first, static_cast<Sector>(k.second), f);
  }
  return x;
}

}  // namespace qsigma
