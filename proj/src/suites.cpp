// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qsigma/classifier.hpp"
#include "qsigma/embedding.hpp"
#include "qsigma/parabolic.hpp"
#include "qsigma/parse.hpp"
#include "qsigma/random.hpp"

namespace qsigma {

namespace {

std::string count_note(const std::string& what, std::size_t bad, std::size_t total) {
  return what + ": " + std::to_string(total - bad) + "/" + std::to_string(total) + " hold";
}

int sign_of(int px, int py) { return px && py ? -1 : 1; }

SuiteResult axioms(Sampler& g, std::size_t cases) {
  SuiteResult r;
  std::size_t anti_bad = 0, jacobi_bad = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    int px = g.coin(), py = g.coin(), pz = g.coin();
    // Half of the triples have z-degrees summing to 0, where psi contributes.
    long dx = g.integer(-3, 3), dy = g.integer(-3, 3);
    long dz = c % 2 ? std::clamp(-dx - dy, -3L, 3L) : g.integer(-3, 3);
    SuperQElement x = g.element(px, dx, dx, true), y = g.element(py, dy, dy, true), z = g.element(pz, dz, dz, true);
    SuperQElement xy = superbracket(x, y), yx = superbracket(y, x);
    bool anti = xy == yx * Scalar(-sign_of(px, py));
    SuperQElement lhs = superbracket(x, superbracket(y, z));
    SuperQElement rhs = superbracket(xy, z) + superbracket(y, superbracket(x, z)) * Scalar(sign_of(px, py));
    bool jacobi = lhs == rhs;
    anti_bad += !anti;
    jacobi_bad += !jacobi;
    r.failures += !(anti && jacobi);
  }
  r.cases = cases;
  r.notes.push_back(count_note("super-antisymmetry", anti_bad, cases));
  r.notes.push_back(count_note("extended super-Jacobi", jacobi_bad, cases));
  return r;
}

SuiteResult product(Sampler& g, std::size_t cases) {
  SuiteResult r;
  for (std::size_t c = 0; c < cases; ++c) {
    SuperQElement x = g.element(static_cast<int>(g.coin()), -3, 3) + g.element(static_cast<int>(g.coin()), -3, 3);
    SuperQElement y = g.element(static_cast<int>(g.coin()), -3, 3);
    SuperQElement xy = assoc_mul(x, y);
    bool ok = true;
    for (long k = -5; k <= 5 && ok; ++k)
      for (int comp : {1, 2}) {
        LoopVector v{{LoopBasis{k, comp}, Scalar(1)}};
        if (act_on_superline(xy, v) != act_on_superline(x, act_on_superline(y, v))) ok = false;
      }
    r.failures += !ok;
  }
  r.cases = cases;
  return r;
}

SuiteResult pullback(Sampler& g, std::size_t cases) {
  SuiteResult r;
  const Scalar s = Scalar::s();
  std::size_t corrected_bad = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    long deg = g.integer(1, 3);
    SuperQElement x = g.element(static_cast<int>(g.coin()), deg, deg);
    SuperQElement y = g.element(static_cast<int>(g.coin()), -deg, -deg);
    Jet lhs = banded_cocycle(phi(x, s, 0), phi(y, s, 0));
    Jet literal(0, psi(x, y));
    if (lhs != literal) {
      ++r.failures;
      if (first.empty())
        first = "first mismatch: x = " + x.str() + ", y = " + y.str() + ": C(phi x, phi y) = " + lhs.str() +
                ", psi = " + literal.str();
    }
    // C(phi x, phi y) = psi(x, y) + central part of phi-hat of the matrix bracket.
    Jet mu = phi_hat(superbracket(x, y).without_central(), s, 0).central();
    corrected_bad += lhs != literal + mu;
  }
  r.cases = cases;
  r.notes.push_back(count_note("literal psi(x, y) = C(phi x, phi y)", r.failures, cases));
  if (!first.empty()) r.notes.push_back(first);
  r.notes.push_back(count_note("psi(x, y) + mu([x, y]) = C(phi x, phi y), mu the phi-hat correction", corrected_bad,
                               cases));
  return r;
}

SuiteResult homomorphism(Sampler& g, std::size_t cases) {
  SuiteResult r;
  const Scalar s = Scalar::s();
  const HalfInt lo(-6), hi(6);
  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t m = c % 3;
    int px = g.coin(), py = g.coin();
    SuperQElement x = g.element(px, -3, 3, true), y = g.element(py, -3, 3, true);
    GlInfElement lhs = phi_hat(superbracket(x, y), s, m).truncate(lo, hi);
    GlInfElement rhs = banded_bracket(phi_hat(x, s, m), phi_hat(y, s, m), lo, hi);
    r.failures += lhs != rhs;
  }
  r.cases = cases;
  return r;
}

SuiteResult intertwining(Sampler& g, std::size_t cases) {
  SuiteResult r;
  const Scalar s = Scalar::s();
  const HalfInt lo(-8), hi(8);
  std::size_t action_bad = 0, grade_bad = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    SuperQElement x = g.element(static_cast<int>(g.coin()), -2, 2);
    BandedOperator op = phi(x, s, 0);
    bool action_ok = true;
    for (int t = -8; t <= 8; ++t) {
      SuperLineVector v{{HalfInt::from_twice(t), Scalar(1)}};
      if (module_action(x, s, v) != apply_window(op, v)) action_ok = false;
    }
    std::map<HalfInt, GlInfElement> want;
    for (const auto& [deg, part] : grade_decompose(x)) {
      GlInfElement w = phi(part, s, 0).truncate(lo, hi);
      if (!w.is_zero()) want.emplace(deg, w);
    }
    auto got = principal_degree(op.truncate(lo, hi));
    bool grade_ok = got == want;
    if (!grade_ok && first.empty()) {
      std::string gd, pd;
      for (const auto& [d, e] : want) gd += (gd.empty() ? "" : ", ") + d.str();
      for (const auto& [d, e] : got) pd += (pd.empty() ? "" : ", ") + d.str();
      first = "first mismatch: x = " + x.str() + ": grade_decompose degrees {" + gd + "}, principal degrees of phi {" +
              pd + "}";
    }
    action_bad += !action_ok;
    grade_bad += !grade_ok;
    r.failures += !(action_ok && grade_ok);
  }
  r.cases = cases;
  r.notes.push_back(count_note("module action = phi window", action_bad, cases));
  r.notes.push_back(count_note("principal_degree(phi x) = grade_decompose(x)", grade_bad, cases));
  if (!first.empty()) r.notes.push_back(first);
  return r;
}

SuiteResult annihilator(Sampler& g, std::size_t cases) {
  SuiteResult r;
  for (std::size_t c = 0; c < cases; ++c) {
    QuasiPolynomial p = g.quasipolynomial(3, 2);
    UPoly b = min_annihilator(p);
    bool ok = annihilates_window(b, p, 40);
    for (const auto& [base, poly] : p.terms()) {
      UPoly smaller = b.divmod(UPoly::linear_factor(base)).first;
      if (annihilates_window(smaller, p, 40)) ok = false;
    }
    r.failures += !ok;
  }
  r.cases = cases;
  return r;
}

SuiteResult linkage(Sampler& g, std::size_t cases) {
  SuiteResult r;
  std::size_t pert_bad = 0, pert_total = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<ModuleDescriptor> ds{g.descriptor(Scalar::s(), c % 2)};
    if (c % 3 == 2) ds.push_back(g.descriptor(Scalar::symbol(kU), 0));
    SSqWeight w = tensor_labels(ds);
    QfReport qf = check_qf(w);
    HalfElement d{Laurent::from_upoly(*qf.b12), Laurent::from_upoly(*qf.b21)};
    bool ok = singular_vector_check(w, d).singular;
    auto expect_false = [&](const WeightFunctional& f) {
      ++pert_total;
      if (singular_vector_check(f, d).singular) {
        ++pert_bad;
        ok = false;
      }
    };
    for (long n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      for (int i : {1, 2}) {
        WeightFunctional f(w);
        f.perturb_label(n, i, Scalar(1));
        expect_false(f);
      }
    }
    WeightFunctional f(w);
    f.perturb_charge(Scalar(1));
    expect_false(f);
    r.failures += !ok;
  }
  r.cases = cases;
  r.notes.push_back(count_note("perturbed weights rejected", pert_bad, pert_total));
  return r;
}

SuiteResult glqf(Sampler& g, std::size_t cases) {
  SuiteResult r;
  for (std::size_t c = 0; c < cases; ++c) {
    GlWeight w = g.gl_weight(c % 3);
    // Direct scan of the relation far beyond the exceptions in [-4, 4].
    std::set<std::tuple<std::size_t, HalfInt>> scanned;
    bool far_violation = false;
    for (std::size_t l = 0; l <= w.order; ++l)
      for (HalfInt k(-30); k <= HalfInt(30); k += HalfInt::half()) {
        if (w.relation(l, k).is_zero()) continue;
        scanned.emplace(l, k);
        if (k < HalfInt(-10) || k > HalfInt(10)) far_violation = true;
      }
    GlQuasifiniteReport rep = gl_quasifinite(w);
    bool ok = rep.quasifinite == !far_violation;
    if (ok && rep.quasifinite) {
      std::set<std::tuple<std::size_t, HalfInt>> listed;
      for (const auto& v : rep.violations) listed.emplace(v.l, v.k);
      ok = listed == scanned;
    }
    r.failures += !ok;
  }
  r.cases = cases;
  return r;
}

SuiteResult roundtrip_suite(Sampler& g, std::size_t cases) {
  SuiteResult r;
  const Scalar bases[] = {Scalar::s(), Scalar::symbol(kU), Scalar::q(), Scalar::symbol(kV)};
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<ModuleDescriptor> ds{g.descriptor(bases[c % 4], c % 3)};
    if (c % 2) ds.push_back(g.descriptor(bases[(c + 1) % 4], (c / 2) % 3));
    SSqWeight w = tensor_labels(ds);
    RoundtripReport rep = roundtrip(w.p12, w.p21);
    bool ok = rep.pass;
    for (const auto& d : rep.descriptors) ok = ok && gl_quasifinite(d.weight).quasifinite;
    r.failures += !ok;
  }
  r.cases = cases;
  // Pinned regression fixture: the rejected charge sign breaks the identity.
  RoundtripReport rejected = roundtrip(QuasiPolynomial::term(Scalar::s(), UPoly::constant(Scalar(-1))), {},
                                       ChargeSign::kRejected);
  const std::vector<std::string> pinned{"p12[s]: expected -1, got 1"};
  bool fixture = !rejected.pass && rejected.diff == pinned;
  r.notes.push_back(std::string("rejected charge sign fixture: ") + (fixture ? "fails as pinned" : "UNEXPECTED"));
  for (const auto& line : rejected.diff) r.notes.push_back("  " + line);
  if (!fixture) ++r.failures;
  return r;
}

SuiteResult sp2(Sampler& g, std::size_t cases) {
  SuiteResult r;
  std::size_t per = std::max<std::size_t>(1, cases / 3);
  for (int k2 : {1, 2, 3}) {
    HalfInt k = HalfInt::from_twice(k2);
    for (std::size_t c = 0; c < per; ++c) {
      GlInfElement a(c % 2);
      long n = g.integer(1, 3);
      for (long t = 0; t < n; ++t) {
        HalfInt i = HalfInt::from_twice(g.integer(-8, 8));
        std::vector<Scalar> v(a.order() + 1);
        for (auto& x : v) x = Scalar(g.integer(-2, 2));
        a.add_entry(i, i - k, Jet(v));
      }
      bool detected = detected_by_half_brackets(a, k + HalfInt(1));
      r.failures += detected == a.is_zero();
      ++r.cases;
    }
  }
  return r;
}

SuiteResult printer(Sampler& g, std::size_t cases) {
  SuiteResult r;
  for (std::size_t c = 0; c < cases; ++c) {
    SuperQElement x = g.any_element();
    bool ok = false;
    try {
      ok = parse_element(x.str()) == x;
    } catch (const std::exception&) {
    }
    r.failures += !ok;
  }
  r.cases = cases;
  return r;
}

using SuiteFn = std::function<SuiteResult(Sampler&, std::size_t)>;

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"axioms", axioms},           {"product", product},   {"pullback", pullback},
      {"homomorphism", homomorphism}, {"intertwining", intertwining}, {"annihilator", annihilator},
      {"linkage", linkage},         {"glqf", glqf},         {"roundtrip", roundtrip_suite},
      {"sp2", sp2},                 {"printer", printer}};
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"axioms", "extended super-Jacobi and super-antisymmetry", 500},
      {"product", "associative product against the superline action", 200},
      {"pullback", "cocycle pullback psi = C(phi x, phi y)", 200},
      {"homomorphism", "phi-hat homomorphism on window [-6, 6], m = 0..2", 200},
      {"intertwining", "intertwining and gradation compatibility", 100},
      {"annihilator", "minimal annihilators of quasipolynomials", 100},
      {"linkage", "quasifiniteness and singular vectors", 20},
      {"glqf", "glinf quasifiniteness against a direct scan", 100},
      {"roundtrip", "synthesis round trip", 10},
      {"sp2", "windowed SP2 for degrees -1/2, -1, -3/2", 90},
      {"printer", "element print/parse round trip", 200},
  };
  return catalog;
}

std::optional<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t cases) {
  auto it = suite_table().find(name);
  if (it == suite_table().end()) return std::nullopt;
  if (cases == 0)
    for (const auto& info : suite_catalog())
      if (info.name == name) cases = info.default_cases;
  Sampler g(seed);
  SuiteResult r = it->second(g, cases);
  r.name = name;
  r.pass = r.failures == 0;
  return r;
}

}  // namespace qsigma
