// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_SUPERQ_HPP
#define QSIGMA_SUPERQ_HPP

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "qsigma/half_int.hpp"
#include "qsigma/laurent.hpp"
#include "qsigma/scalar.hpp"

namespace qsigma {

/// Matrix unit M_ij of M(1|1).
enum class Sector : int { k11 = 0, k12 = 1, k21 = 2, k22 = 3 };

inline constexpr std::array<Sector, 4> kAllSectors = {Sector::k11, Sector::k12, Sector::k21, Sector::k22};

constexpr int sector_row(Sector s) { return static_cast<int>(s) / 2 + 1; }
constexpr int sector_col(Sector s) { return static_cast<int>(s) % 2 + 1; }
constexpr Sector make_sector(int row, int col) { return static_cast<Sector>((row - 1) * 2 + (col - 1)); }
// 0 for M11, M22; 1 for M12, M21.
constexpr int sector_parity(Sector s) { return sector_row(s) == sector_col(s) ? 0 : 1; }
std::string sector_name(Sector s);  // "E11", ...

struct TermKey {
  long n = 0;  // power of z
  Sector sector = Sector::k11;
  auto operator<=>(const TermKey&) const = default;
};

/// Element of the centrally extended superalgebra: a finite sum of
/// z^n f(T_q) M_ij plus a multiple of the central element C.
class SuperQElement {
 public:
  using Map = std::map<TermKey, Laurent>;

  SuperQElement() = default;
  static SuperQElement term(long n, const Laurent& f, Sector sector);
  static SuperQElement central(const Scalar& c);

  const Map& terms() const { return terms_; }
  const Scalar& central() const { return central_; }
  Laurent coeff(long n, Sector sector) const;
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }
  bool has_central() const { return !central_.is_zero(); }

  // Parity 0 or 1 if homogeneous; -1 otherwise (the zero element is even).
  int parity() const;
  // Components of parity 0 (including C) and 1.
  std::pair<SuperQElement, SuperQElement> parity_split() const;
  SuperQElement without_central() const;

  SuperQElement operator-() const;
  SuperQElement operator+(const SuperQElement& o) const;
  SuperQElement operator-(const SuperQElement& o) const;
  SuperQElement operator*(const Scalar& c) const;
  SuperQElement& operator+=(const SuperQElement& o);
  SuperQElement& operator-=(const SuperQElement& o) { return *this += -o; }
  bool operator==(const SuperQElement& o) const { return terms_ == o.terms_ && central_ == o.central_; }
  bool operator!=(const SuperQElement& o) const { return !(*this == o); }

  void add_term(long n, Sector sector, const Laurent& f);

  std::string str() const;

 private:
  Map terms_;
  Scalar central_;
};

std::ostream& operator<<(std::ostream& os, const SuperQElement& x);

/// Associative product; central parts are ignored.
SuperQElement assoc_mul(const SuperQElement& x, const SuperQElement& y);

/// Lie superbracket in the central extension, including the psi term.
SuperQElement superbracket(const SuperQElement& x, const SuperQElement& y);

/// Str_0 of the z-degree-zero part.
Scalar str0(const SuperQElement& x);

/// The 2-cocycle psi, extended to all pairs by bilinearity and super
/// antisymmetry from the pairs with z-degrees (r, -r), r > 0.
Scalar psi(const SuperQElement& x, const SuperQElement& y);

/// sigma(f(T_q) M_ij) = f(q T_q) M_ij on every term.
SuperQElement sigma(const SuperQElement& x);

/// Principal 1/2-gradation: z^n M11/M22 and C -> n (C -> 0),
/// z^n M12 -> n + 1/2, z^n M21 -> n - 1/2.
HalfInt principal_degree_of(const TermKey& key);
std::map<HalfInt, SuperQElement> grade_decompose(const SuperQElement& x);

/// Basis vector z^k e_component of C[z, z^-1]^{1|1}, component in {1, 2}.
struct LoopBasis {
  long k = 0;
  int component = 1;
  auto operator<=>(const LoopBasis&) const = default;
};
using LoopVector = std::map<LoopBasis, Scalar>;

/// Action on C[z, z^-1]^{1|1}: z^k' f(T_q) M_ij sends z^k e_j to f(q^k) z^{k+k'} e_i.
/// Throws MathError for an element with a central part.
LoopVector act_on_superline(const SuperQElement& x, const LoopVector& v);

}  // namespace qsigma

#endif  // QSIGMA_SUPERQ_HPP
