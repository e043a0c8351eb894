// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/classifier.hpp"

#include <algorithm>
#include <set>

#include "qsigma/errors.hpp"

namespace qsigma {

void SSqWeight::validate() const {
  Scalar p21_0 = qp_eval(p21, 0), p12_0 = qp_eval(p12, 0);
  if (p21_0 - p12_0 != c)
    throw MathError("inconsistent weight: P21(0) - P12(0) = " + (p21_0 - p12_0).str() + " but c = " + c.str());
  if (zero_split && zero_split->first + zero_split->second != p21_0)
    throw MathError("inconsistent zero split: D(0,1) + D(0,2) must equal P21(0) = " + p21_0.str());
}

SSqWeight SSqWeight::operator+(const SSqWeight& o) const {
  SSqWeight r{p12 + o.p12, p21 + o.p21, c + o.c, std::nullopt};
  if (zero_split && o.zero_split)
    r.zero_split = std::make_pair(zero_split->first + o.zero_split->first, zero_split->second + o.zero_split->second);
  return r;
}

QfReport check_qf(const SSqWeight& w) {
  w.validate();
  QfReport rep;
  rep.quasifinite = true;
  rep.b12 = min_annihilator(w.p12);
  rep.b21 = min_annihilator(w.p21);
  return rep;
}

QfReport check_qf(const RawLabels& raw, std::size_t max_order) {
  if (raw.hi < raw.lo || raw.lo > 0 || raw.hi < 0) throw MathError("raw label window must contain 0");
  auto get = [](const std::map<long, Scalar>& m, long n) {
    auto it = m.find(n);
    return it == m.end() ? Scalar() : it->second;
  };
  std::map<long, Scalar> d21, d12;
  for (long n = raw.lo; n <= raw.hi; ++n) {
    Scalar a = get(raw.delta1, n), b = get(raw.delta2, n);
    d21[n] = a + b;
    d12[n] = n == 0 ? a + b - raw.c : a * Scalar::q(static_cast<std::int32_t>(n)) + b;
  }
  QfReport rep;
  auto p21 = interpolate_finite(d21, max_order);
  auto p12 = interpolate_finite(d12, max_order);
  if (!p21 || !p12) return rep;
  rep.quasifinite = true;
  rep.b12 = min_annihilator(*p12);
  rep.b21 = min_annihilator(*p21);
  rep.recovered = SSqWeight{*p12, *p21, raw.c, std::make_pair(get(raw.delta1, 0), get(raw.delta2, 0))};
  return rep;
}

Scalar delta_of(const SSqWeight& w, long n, int i) {
  if (n == 0) throw MathError("D(0, i) is not determined by (P12, P21, c); supply a zero split");
  if (i != 1 && i != 2) throw MathError("label index must be 1 or 2");
  Scalar qn = Scalar::q(static_cast<std::int32_t>(n));
  Scalar p21 = qp_eval(w.p21, n);
  Scalar d1 = (qp_eval(w.p12, n) - p21) / (qn - Scalar(1));
  return i == 1 ? d1 : p21 - d1;
}

WeightFunctional::WeightFunctional(SSqWeight w) : w_(std::move(w)), c_(w_->c) {}

WeightFunctional::WeightFunctional(const RawLabels& raw) : raw_(raw), c_(raw.c) {}

Scalar WeightFunctional::delta(long n, int i) const {
  Scalar v;
  if (raw_) {
    const auto& m = i == 1 ? raw_->delta1 : raw_->delta2;
    auto it = m.find(n);
    if (it != m.end()) v = it->second;
  } else if (n == 0) {
    if (!w_->zero_split) throw MathError("D(0, i) needs a zero split");
    v = i == 1 ? w_->zero_split->first : w_->zero_split->second;
  } else {
    v = delta_of(*w_, n, i);
  }
  auto it = bumps_.find({n, i});
  if (it != bumps_.end()) v += it->second;
  return v;
}

void WeightFunctional::perturb_label(long n, int i, const Scalar& eps) {
  if (n == 0) throw MathError("perturb a nonzero label index");
  bumps_[{n, i}] += eps;
}

Scalar WeightFunctional::evaluate(const SuperQElement& x) const {
  Scalar acc = x.central() * c_;
  Scalar zero11 = x.coeff(0, Sector::k11).coeff(0), zero22 = x.coeff(0, Sector::k22).coeff(0);
  Laurent f11 = x.coeff(0, Sector::k11), f22 = x.coeff(0, Sector::k22);
  std::set<long> exps;
  for (const auto* f : {&f11, &f22})
    for (const auto& [k, a] : f->terms())
      if (k != 0) exps.insert(k);
  for (long k : exps) {
    Scalar a = f11.coeff(k), b = f22.coeff(k);
    if (raw_) {
      acc += a * delta(k, 1) + b * delta(k, 2);
      continue;
    }
    // a D1 + b D2 = (a - b)/(q^k - 1) (P12 - P21) + b P21; the quotient of
    // the small coefficients is formed first to keep denominators small.
    Scalar p21 = qp_eval(w_->p21, k);
    Scalar ratio = (a - b) / (Scalar::q(static_cast<std::int32_t>(k)) - Scalar(1));
    if (!ratio.is_zero()) acc += ratio * (qp_eval(w_->p12, k) - p21);
    acc += b * p21;
    for (int i : {1, 2}) {
      auto it = bumps_.find({k, i});
      if (it != bumps_.end()) acc += (i == 1 ? a : b) * it->second;
    }
  }
  if (zero11.is_zero() && zero22.is_zero()) return acc;
  if (raw_ || w_->zero_split) return acc + zero11 * delta(0, 1) + zero22 * delta(0, 2);
  if (zero11 != zero22) throw MathError("M11 and M22 constant terms differ and the zero split is unknown");
  return acc + zero11 * qp_eval(w_->p21, 0);
}

namespace {

Scalar factorial(std::size_t l) {
  mpz_class f = 1;
  for (std::size_t i = 2; i <= l; ++i) f *= static_cast<unsigned long>(i);
  return Scalar(mpq_class(f));
}

UPoly x_term(std::size_t l, const Scalar& c) {
  std::vector<Scalar> v(l + 1);
  v[l] = c;
  return UPoly(std::move(v));
}

bool tails_zero(const GlWeight& w) {
  for (std::size_t l = 0; l <= w.order; ++l)
    for (const auto* seq : {&w.ints[l], &w.halves[l]})
      if (!seq->neg_tail.is_zero() || !seq->pos_tail.is_zero()) return false;
  return true;
}

}  // namespace

SSqWeight labels_of_module(const ModuleDescriptor& d) {
  const GlWeight& w = d.weight;
  if (w.order != d.m) throw MathError("descriptor order and weight order differ");
  if (!gl_quasifinite(w).quasifinite) throw MathError("weight is not quasifinite");
  long lo = 0, hi = 1;
  for (std::size_t l = 0; l <= w.order; ++l)
    for (const auto* seq : {&w.ints[l], &w.halves[l]})
      for (const auto& [k, v] : seq->except) {
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
  lo -= 2;
  hi += 2;

  SSqWeight out;
  for (std::size_t l = 0; l <= w.order; ++l) {
    Scalar scale = Scalar::L(static_cast<std::int32_t>(l)) / factorial(l);
    const LabelSequence &ints = w.ints[l], &halves = w.halves[l];
    for (long j = lo; j <= hi; ++j) {
      Scalar base = d.s * Scalar::q(static_cast<std::int32_t>(-j));
      Scalar r21 = ints.at(j) + halves.at(j);
      Scalar r12 = ints.at(j + 1) + halves.at(j);
      if (!r21.is_zero()) out.p21.add_term(base, x_term(l, r21 * scale));
      if (!r12.is_zero()) out.p12.add_term(base, x_term(l, r12 * scale));
    }
    // lambda(q^{ak}/(1-q^k) c_l) (q^k - 1) = -s^k c_l
    if (!w.charges[l].is_zero()) out.p12.add_term(d.s, x_term(l, -w.charges[l] * scale));
  }
  out.c = qp_eval(out.p21, 0) - qp_eval(out.p12, 0);
  if (tails_zero(w)) {
    Scalar d1, d2;
    for (const auto& [k, v] : w.ints[0].except) d1 += v;
    for (const auto& [k, v] : w.halves[0].except) d2 += v;
    out.zero_split = std::make_pair(d1, d2);
  }
  return out;
}

SSqWeight tensor_labels(const std::vector<ModuleDescriptor>& ds) {
  SSqWeight acc;
  acc.zero_split = std::make_pair(Scalar(), Scalar());
  for (const auto& d : ds) acc = acc + labels_of_module(d);
  return acc;
}

std::vector<ModuleDescriptor> synthesize(const QuasiPolynomial& p12, const QuasiPolynomial& p21, ChargeSign sign) {
  std::vector<Scalar> bases;
  for (const auto* p : {&p12, &p21})
    for (const auto& [b, poly] : p->terms()) bases.push_back(b);
  std::vector<ModuleDescriptor> out;
  for (const auto& cls : congruence_classes(bases)) {
    std::size_t m = 0;
    for (const auto& b : cls.members)
      m = std::max<std::size_t>(m, static_cast<std::size_t>(std::max({0L, p12.poly(b).degree(), p21.poly(b).degree()})));
    ModuleDescriptor d{cls.representative, m, GlWeight::zero(m)};
    long top = cls.shifts.back();
    for (std::size_t l = 0; l <= m; ++l) {
      Scalar unscale = Scalar::L(-static_cast<std::int32_t>(l));
      std::map<long, Scalar> h21, diff;
      for (std::size_t r = 0; r < cls.members.size(); ++r) {
        Scalar a = jet_at_zero(p21, cls.members[r], l) * unscale;
        Scalar b = jet_at_zero(p12, cls.members[r], l) * unscale;
        h21[cls.shifts[r]] = a;
        diff[cls.shifts[r]] = a - b;
      }
      Scalar cl;
      for (const auto& [k, v] : diff) cl += v;
      d.weight.charges[l] = sign == ChargeSign::kAdopted ? cl : -cl;
      // lambda_i = sum_{k >= i} diff_k, accumulated downwards from the top.
      Scalar running;
      std::map<long, Scalar> lam;
      for (long i = top; i >= 1; --i) {
        auto it = diff.find(i);
        if (it != diff.end()) running += it->second;
        lam[i] = running;
      }
      for (const auto& [i, v] : lam)
        if (!v.is_zero()) d.weight.ints[l].except[i] = v;
      for (long i = 0; i <= top; ++i) {
        Scalar h = h21.count(i) ? h21[i] : Scalar();
        Scalar v = h - (lam.count(i) ? lam[i] : Scalar());
        if (!v.is_zero()) d.weight.halves[l].except[i] = v;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

RoundtripReport roundtrip(const QuasiPolynomial& p12, const QuasiPolynomial& p21, ChargeSign sign) {
  RoundtripReport rep;
  rep.descriptors = synthesize(p12, p21, sign);
  SSqWeight got = tensor_labels(rep.descriptors);
  Scalar c = qp_eval(p21, 0) - qp_eval(p12, 0);
  if (sign == ChargeSign::kRejected) c = -c;
  auto compare = [&rep](const std::string& name, const QuasiPolynomial& want, const QuasiPolynomial& have) {
    std::set<Scalar, ScalarLess> bases;
    for (const auto* p : {&want, &have})
      for (const auto& [b, poly] : p->terms()) bases.insert(b);
    for (const auto& b : bases) {
      UPoly x = want.poly(b), y = have.poly(b);
      if (x != y) rep.diff.push_back(name + "[" + b.str() + "]: expected " + x.str() + ", got " + y.str());
    }
  };
  compare("p12", p12, got.p12);
  compare("p21", p21, got.p21);
  if (got.c != c) rep.diff.push_back("c: expected " + c.str() + ", got " + got.c.str());
  rep.pass = rep.diff.empty();
  return rep;
}

}  // namespace qsigma
