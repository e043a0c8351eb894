// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsigma/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qsigma/errors.hpp"
#include "qsigma/parse.hpp"

namespace qsigma {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) fail(path, "unknown key \"" + k + "\"");
  }
}

Scalar scalar_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(path, "expected a scalar string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const MathError& e) {
    fail(path, e.what());
  }
}

long integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

long key_to_long(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  long k = 0;
  try {
    k = std::stol(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) fail(path, "key \"" + key + "\" is not an integer");
  return k;
}

std::vector<Scalar> scalar_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// One scalar for every l, or a list of m + 1 scalars.
std::vector<Scalar> per_l(const Json& j, const std::string& path, std::size_t m) {
  if (!j.is_array()) return std::vector<Scalar>(m + 1, scalar_at(j, path));
  std::vector<Scalar> v = scalar_list(j, path);
  if (v.size() != m + 1) fail(path, "expected " + std::to_string(m + 1) + " entries, got " + std::to_string(v.size()));
  return v;
}

Json per_l_json(const std::vector<Scalar>& v) {
  bool uniform = true;
  for (const auto& x : v) uniform = uniform && x == v.front();
  if (uniform) return v.front().str();
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

void read_family(const Json& j, const std::string& path, std::size_t m, std::vector<LabelSequence>& seqs) {
  if (!j.is_object()) fail(path, "expected an object");
  only_keys(j, path, {"neg_tail", "pos_tail", "except"});
  if (const Json* t = optional_member(j, path, "neg_tail")) {
    auto v = per_l(*t, path + ".neg_tail", m);
    for (std::size_t l = 0; l <= m; ++l) seqs[l].neg_tail = v[l];
  }
  if (const Json* t = optional_member(j, path, "pos_tail")) {
    auto v = per_l(*t, path + ".pos_tail", m);
    for (std::size_t l = 0; l <= m; ++l) seqs[l].pos_tail = v[l];
  }
  if (const Json* e = optional_member(j, path, "except")) {
    std::string epath = path + ".except";
    if (!e->is_object()) fail(epath, "expected an object");
    for (const auto& [key, val] : e->items()) {
      long k = key_to_long(key, epath);
      auto v = per_l(val, epath + "." + key, m);
      for (std::size_t l = 0; l <= m; ++l) {
        // Exceptions equal to the tail are dropped so equal weights compare equal.
        if (v[l] != (k <= 0 ? seqs[l].neg_tail : seqs[l].pos_tail)) seqs[l].except[k] = v[l];
      }
    }
  }
}

Json family_json(const std::vector<LabelSequence>& seqs) {
  std::size_t m = seqs.size() - 1;
  std::vector<Scalar> neg, pos;
  std::set<long> keys;
  for (const auto& s : seqs) {
    neg.push_back(s.neg_tail);
    pos.push_back(s.pos_tail);
    for (const auto& [k, v] : s.except) keys.insert(k);
  }
  Json ex = Json::object();
  for (long k : keys) {
    std::vector<Scalar> v;
    for (std::size_t l = 0; l <= m; ++l) v.push_back(seqs[l].at(k));
    ex[std::to_string(k)] = per_l_json(v);
  }
  return Json{{"neg_tail", per_l_json(neg)}, {"pos_tail", per_l_json(pos)}, {"except", ex}};
}

std::map<long, Scalar> sparse_labels(const Json& j, const std::string& path) {
  std::map<long, Scalar> out;
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, val] : j.items()) {
    Scalar v = scalar_at(val, path + "." + key);
    if (!v.is_zero()) out[key_to_long(key, path)] = v;
  }
  return out;
}

}  // namespace

QuasiPolynomial quasipoly_from_json(const Json& j, const std::string& path) {
  only_keys(j, path, {"terms"});
  const Json& terms = member(j, path, "terms");
  std::string tpath = path + ".terms";
  if (!terms.is_array()) fail(tpath, "expected an array");
  QuasiPolynomial p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string ipath = tpath + "[" + std::to_string(i) + "]";
    only_keys(terms[i], ipath, {"base", "coeffs"});
    Scalar base = scalar_at(member(terms[i], ipath, "base"), ipath + ".base");
    if (base.is_zero()) fail(ipath + ".base", "base must be nonzero");
    p.add_term(base, UPoly(scalar_list(member(terms[i], ipath, "coeffs"), ipath + ".coeffs")));
  }
  return p;
}

Json to_json(const QuasiPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [base, poly] : p.terms()) {
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
    terms.push_back(Json{{"base", base.str()}, {"coeffs", coeffs}});
  }
  return Json{{"terms", terms}};
}

SSqWeight ssq_from_json(const Json& j, const std::string& path) {
  only_keys(j, path, {"p12", "p21", "c", "zero_split"});
  SSqWeight w;
  w.p12 = quasipoly_from_json(member(j, path, "p12"), path + ".p12");
  w.p21 = quasipoly_from_json(member(j, path, "p21"), path + ".p21");
  w.c = scalar_at(member(j, path, "c"), path + ".c");
  if (const Json* z = optional_member(j, path, "zero_split")) {
    auto v = scalar_list(*z, path + ".zero_split");
    if (v.size() != 2) fail(path + ".zero_split", "expected 2 entries");
    w.zero_split = std::make_pair(v[0], v[1]);
  }
  try {
    w.validate();
  } catch (const MathError& e) {
    fail(path, e.what());
  }
  return w;
}

Json to_json(const SSqWeight& w) {
  Json j{{"p12", to_json(w.p12)}, {"p21", to_json(w.p21)}, {"c", w.c.str()}};
  if (w.zero_split) j["zero_split"] = Json::array({w.zero_split->first.str(), w.zero_split->second.str()});
  return j;
}

GlWeight gl_weight_from_json(const Json& j, const std::string& path) {
  only_keys(j, path, {"m", "charges", "labels"});
  long m = integer_at(member(j, path, "m"), path + ".m");
  if (m < 0 || m > 16) fail(path + ".m", "order must lie in 0 .. 16");
  GlWeight w = GlWeight::zero(static_cast<std::size_t>(m));
  std::vector<Scalar> charges = scalar_list(member(j, path, "charges"), path + ".charges");
  if (charges.size() != w.order + 1)
    fail(path + ".charges", "expected " + std::to_string(m + 1) + " entries, got " + std::to_string(charges.size()));
  w.charges = charges;
  if (const Json* labels = optional_member(j, path, "labels")) {
    std::string lpath = path + ".labels";
    if (!labels->is_object()) fail(lpath, "expected an object");
    only_keys(*labels, lpath, {"int", "half"});
    if (const Json* f = optional_member(*labels, lpath, "int")) read_family(*f, lpath + ".int", w.order, w.ints);
    if (const Json* f = optional_member(*labels, lpath, "half")) read_family(*f, lpath + ".half", w.order, w.halves);
  }
  return w;
}

Json to_json(const GlWeight& w) {
  Json charges = Json::array();
  for (const auto& c : w.charges) charges.push_back(c.str());
  return Json{{"m", w.order},
              {"charges", charges},
              {"labels", Json{{"int", family_json(w.ints)}, {"half", family_json(w.halves)}}}};
}

RawLabels raw_labels_from_json(const Json& j, const std::string& path) {
  only_keys(j, path, {"raw"});
  std::string rpath = path + ".raw";
  const Json& r = member(j, path, "raw");
  only_keys(r, rpath, {"lo", "hi", "delta1", "delta2", "c"});
  RawLabels raw;
  raw.lo = integer_at(member(r, rpath, "lo"), rpath + ".lo");
  raw.hi = integer_at(member(r, rpath, "hi"), rpath + ".hi");
  if (raw.lo > 0 || raw.hi < 0 || raw.hi - raw.lo > 200) fail(rpath, "window must contain 0 and span at most 200");
  raw.delta1 = sparse_labels(member(r, rpath, "delta1"), rpath + ".delta1");
  raw.delta2 = sparse_labels(member(r, rpath, "delta2"), rpath + ".delta2");
  for (const auto* d : {&raw.delta1, &raw.delta2})
    for (const auto& [n, v] : *d)
      if (n < raw.lo || n > raw.hi) fail(rpath, "label at " + std::to_string(n) + " lies outside the window");
  raw.c = scalar_at(member(r, rpath, "c"), rpath + ".c");
  return raw;
}

ModuleDescriptor descriptor_from_json(const Json& j, const std::string& path) {
  only_keys(j, path, {"s", "m", "weight"});
  ModuleDescriptor d;
  d.s = scalar_at(member(j, path, "s"), path + ".s");
  if (d.s.is_zero()) fail(path + ".s", "embedding point must be nonzero");
  long m = integer_at(member(j, path, "m"), path + ".m");
  d.weight = gl_weight_from_json(member(j, path, "weight"), path + ".weight");
  if (m != static_cast<long>(d.weight.order)) fail(path + ".m", "order differs from the weight's order");
  d.m = d.weight.order;
  return d;
}

Json to_json(const ModuleDescriptor& d) {
  return Json{{"s", d.s.str()}, {"m", d.m}, {"weight", to_json(d.weight)}};
}

std::vector<ModuleDescriptor> descriptors_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) return {descriptor_from_json(j, path)};
  std::vector<ModuleDescriptor> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(descriptor_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json to_json(const std::vector<ModuleDescriptor>& ds) {
  Json a = Json::array();
  for (const auto& d : ds) a.push_back(to_json(d));
  return a;
}

WeightInput weight_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (j.contains("raw")) return raw_labels_from_json(j);
  if (j.contains("p12") || j.contains("p21")) return ssq_from_json(j);
  return gl_weight_from_json(j);
}

Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(file + ": invalid JSON: " + e.what());
  }
}

}  // namespace qsigma
