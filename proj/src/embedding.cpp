// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/embedding.hpp"

#include <algorithm>

#include "qsigma/errors.hpp"

namespace qsigma {

HalfInt Strand::offset() const {
  GlIndex ij = sector_map(-k, 0, sector);
  return ij.second - ij.first;
}

Jet BandedOperator::strand_entry(const Strand& st, HalfInt i, HalfInt j) const {
  bool col_int = sector_col(st.sector) == 1;
  if (j.is_integer() != col_int) return Jet(order_);
  long big_j = col_int ? j.floor() : (j + HalfInt::half()).floor();
  GlIndex pos = sector_map(big_j - st.k, big_j, st.sector);
  if (pos.first != i) return Jet(order_);
  return jet_eval(st.f, s_ * Scalar::q(static_cast<std::int32_t>(-big_j)), order_);
}

Jet BandedOperator::entry(HalfInt i, HalfInt j) const {
  Jet acc(order_);
  for (const auto& st : strands_)
    if (j - i == st.offset()) acc += strand_entry(st, i, j);
  return acc;
}

std::map<GlIndex, Jet> BandedOperator::entries_in(HalfInt lo, HalfInt hi) const {
  std::map<GlIndex, Jet> out;
  for (const auto& st : strands_) {
    HalfInt d = st.offset();
    for (HalfInt i = lo; i <= hi; i += HalfInt::half()) {
      HalfInt j = i + d;
      if (j < lo || j > hi) continue;
      Jet v = strand_entry(st, i, j);
      if (v.is_zero()) continue;
      auto [it, inserted] = out.emplace(GlIndex{i, j}, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

GlInfElement BandedOperator::truncate(HalfInt lo, HalfInt hi) const {
  GlInfElement a(order_);
  for (const auto& [ij, v] : entries_in(lo, hi)) a.add_entry(ij.first, ij.second, v);
  a.add_central(central_);
  return a;
}

std::string DenseWindow::str() const {
  std::vector<std::vector<std::string>> cells(rows.size());
  std::size_t width = 1;
  for (const auto& h : index) width = std::max(width, h.str().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& v : rows[r]) {
      cells[r].push_back(v.str());
      width = std::max(width, cells[r].back().size());
    }
  }
  auto pad = [width](const std::string& t) { return std::string(width - t.size(), ' ') + t; };
  std::string out = pad("");
  for (const auto& h : index) out += "  " + pad(h.str());
  out += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += pad(index[r].str());
    for (const auto& c : cells[r]) out += "  " + pad(c);
    out += "\n";
  }
  out += "central: " + central.str() + "\n";
  return out;
}

DenseWindow window(const BandedOperator& op, HalfInt lo, HalfInt hi) {
  if (hi < lo) throw MathError("window requires lo <= hi");
  DenseWindow w;
  for (HalfInt i = lo; i <= hi; i += HalfInt::half()) w.index.push_back(i);
  w.rows.assign(w.index.size(), std::vector<Jet>(w.index.size(), Jet(op.order())));
  auto pos = [&](HalfInt i) { return static_cast<std::size_t>((i - lo).twice()); };
  for (const auto& [ij, v] : op.entries_in(lo, hi)) w.rows[pos(ij.first)][pos(ij.second)] = v;
  w.central = op.central();
  return w;
}

BandedOperator phi(const SuperQElement& x, const Scalar& s, std::size_t order) {
  if (x.has_central()) throw MathError("phi is undefined on C; use phi_hat");
  BandedOperator op(s, order);
  for (const auto& [key, f] : x.terms()) op.add_strand(Strand{key.n, key.sector, f});
  return op;
}

BandedOperator phi_hat(const SuperQElement& x, const Scalar& s, std::size_t order) {
  BandedOperator op = phi(x.without_central(), s, order);
  op.add_central(Jet(order, x.central()));
  for (const auto& [key, f] : x.terms()) {
    if (key.n != 0 || sector_parity(key.sector) != 0) continue;
    int i = sector_row(key.sector);
    for (const auto& [k, c] : f.terms()) {
      if (k == 0) continue;
      // -(-1)^i s^k / (1 - q^k) q^{kt}
      Scalar coeff = c * s.pow(k) / (Scalar(1) - Scalar::q(static_cast<std::int32_t>(k)));
      if (i == 2) coeff = -coeff;
      op.add_central(jet_exp(k, order) * coeff);
    }
  }
  return op;
}

GlInfElement banded_bracket(const BandedOperator& a, const BandedOperator& b, HalfInt lo, HalfInt hi) {
  if (a.order() != b.order()) throw MathError("jet order mismatch");
  GlInfElement r(a.order());
  auto product = [&](const BandedOperator& x, const Strand& sx, const BandedOperator& y, const Strand& sy,
                     bool negate) {
    HalfInt dx = sx.offset(), dy = sy.offset();
    for (HalfInt i = lo; i <= hi; i += HalfInt::half()) {
      HalfInt j = i + dx, k = j + dy;
      if (k < lo || k > hi) continue;
      Jet u = x.strand_entry(sx, i, j);
      if (u.is_zero()) continue;
      Jet w = y.strand_entry(sy, j, k);
      if (w.is_zero()) continue;
      Jet v = u * w;
      r.add_entry(i, k, negate ? -v : v);
    }
  };
  for (const auto& sa : a.strands()) {
    for (const auto& sb : b.strands()) {
      product(a, sa, b, sb, false);
      // - (-1)^{|a||b|} b a
      bool both_odd = sa.parity() && sb.parity();
      product(b, sb, a, sa, !both_odd);
    }
  }
  r.add_central(banded_cocycle(a, b));
  return r;
}

Jet banded_cocycle(const BandedOperator& a, const BandedOperator& b) {
  Jet acc(a.order());
  for (const auto& sa : a.strands()) {
    HalfInt d = sa.offset();
    if (d == HalfInt(0)) continue;
    for (const auto& sb : b.strands()) {
      if (sb.offset() != -d) continue;
      // Rows r with exactly one of r, r + d at most 0.
      HalfInt lo = d > HalfInt(0) ? HalfInt::half() - d : HalfInt::half();
      HalfInt hi = d > HalfInt(0) ? HalfInt(0) : -d;
      for (HalfInt r = lo; r <= hi; r += HalfInt::half()) {
        int chi = (r <= HalfInt(0) ? 1 : 0) - (r + d <= HalfInt(0) ? 1 : 0);
        Jet u = a.strand_entry(sa, r, r + d);
        if (u.is_zero()) continue;
        Jet v = u * b.strand_entry(sb, r + d, r);
        if (!r.is_integer()) v = -v;
        acc += chi > 0 ? v : -v;
      }
    }
  }
  return acc;
}

SuperLineVector module_action(const SuperQElement& x, const Scalar& s, const SuperLineVector& v) {
  if (x.has_central()) throw MathError("the superline module carries no central action");
  const HalfInt half = HalfInt::half();
  SuperLineVector out;
  auto add = [&out](HalfInt i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [idx, coeff] : v) {
    for (const auto& [key, f] : x.terms()) {
      long k = key.n;
      bool from_int = sector_col(key.sector) == 1;
      if (idx.is_integer() != from_int) continue;
      // v_j (integer family) or v_{j-1/2} (half family)
      long j = from_int ? idx.floor() : (idx + half).floor();
      Scalar value;
      for (const auto& [n, c] : f.terms()) value += c * (s * Scalar::q(static_cast<std::int32_t>(-j))).pow(n);
      HalfInt target = sector_row(key.sector) == 1 ? HalfInt(j - k) : HalfInt(j - k) - half;
      add(target, value * coeff);
    }
  }
  return out;
}

SuperLineVector apply_window(const BandedOperator& op, const SuperLineVector& v) {
  if (op.order() != 0) throw MathError("vectors carry no jets; use order 0");
  SuperLineVector out;
  for (const auto& [j, coeff] : v) {
    for (const auto& st : op.strands()) {
      HalfInt i = j - st.offset();
      Jet e = op.strand_entry(st, i, j);
      if (e.is_zero()) continue;
      Scalar c = e[0] * coeff;
      auto [it, inserted] = out.emplace(i, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

KernelReport kernel_test(const SuperQElement& x, const Scalar& s, std::size_t order) {
  KernelReport rep;
  SuperQElement body = x.without_central();
  if (body.is_zero()) {
    rep.in_kernel = x.is_zero();
    return rep;
  }
  BandedOperator op = phi(body, s, order);
  // A nonzero Laurent polynomial has finitely many roots, so some column in
  // a range wider than the total number of coefficients carries a nonzero
  // entry when s is generic.
  std::size_t budget = 0;
  for (const auto& [key, f] : body.terms()) budget += f.terms().size();
  for (long step = 0; step <= static_cast<long>(2 * budget + 2); ++step) {
    long j = step % 2 == 0 ? -(step / 2) : (step + 1) / 2;
    for (const auto& st : op.strands()) {
      for (HalfInt col : {HalfInt(j), HalfInt(j) - HalfInt::half()}) {
        HalfInt row = col - st.offset();
        Jet e = op.entry(row, col);
        if (!e.is_zero()) {
          rep.witness = GlIndex{row, col};
          rep.witness_value = e;
          return rep;
        }
      }
    }
  }
  rep.in_kernel = true;  // only reachable for special (non-formal) s
  return rep;
}

std::vector<BandedOperator> phi_multi(const SuperQElement& x, const std::vector<Scalar>& points,
                                      const std::vector<std::size_t>& orders) {
  if (points.size() != orders.size()) throw MathError("phi_multi needs one order per point");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (q_power_ratio(points[a], points[b]))
        throw MathError("points " + points[a].str() + " and " + points[b].str() +
                        " differ by a power of q; the points must lie in distinct classes mod q^Z");
  std::vector<BandedOperator> out;
  for (std::size_t a = 0; a < points.size(); ++a) out.push_back(phi_hat(x, points[a], orders[a]));
  return out;
}

}  // namespace qsigma
