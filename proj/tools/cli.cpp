// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "qsigma/classifier.hpp"
#include "qsigma/embedding.hpp"
#include "qsigma/errors.hpp"
#include "qsigma/io.hpp"
#include "qsigma/parse.hpp"
#include "qsigma/suites.hpp"

namespace qsigma {

namespace {

HalfInt parse_half(const std::string& text) {
  std::string t = text;
  bool half = false;
  if (t.size() > 2 && t.compare(t.size() - 2, 2, "/2") == 0) {
    half = true;
    t.resize(t.size() - 2);
  }
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size() || (half && v % 2 == 0)) throw ParseError("bad half-integer '" + text + "'");
  return half ? HalfInt::from_twice(v) : HalfInt(v);
}

std::pair<HalfInt, HalfInt> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("window must be A:B, got '" + text + "'");
  HalfInt lo = parse_half(text.substr(0, colon)), hi = parse_half(text.substr(colon + 1));
  if (hi < lo) throw ParseError("window " + text + " is empty");
  if ((hi - lo) > HalfInt(40)) throw ParseError("window " + text + " is wider than 40");
  return {lo, hi};
}

std::pair<std::size_t, mpq_class> parse_subst(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("substitution must be name=value, got '" + text + "'");
  auto idx = symbol_index(text.substr(0, eq));
  if (!idx) throw ParseError("unknown symbol '" + text.substr(0, eq) + "'");
  mpq_class v;
  if (v.set_str(text.substr(eq + 1), 10) != 0) throw ParseError("bad rational '" + text.substr(eq + 1) + "'");
  v.canonicalize();
  return {*idx, v};
}

Jet substitute(const Jet& j, const std::vector<std::pair<std::size_t, mpq_class>>& subs) {
  Jet out = j;
  for (std::size_t l = 0; l <= out.order(); ++l)
    for (const auto& [sym, v] : subs) out[l] = out[l].substitute(sym, v);
  return out;
}

void print_qf(std::ostream& out, const QfReport& r) {
  if (!r.quasifinite) {
    out << "quasifinite: false\n";
    return;
  }
  out << "quasifinite: true, b12 = " << r.b12->str() << ", b21 = " << r.b21->str() << "\n";
}

// SSq weights directly, raw labels through recovery; nullopt when the raw
// labels are not quasifinite.
std::optional<SSqWeight> ssq_input(const std::string& file) {
  WeightInput in = weight_from_json(read_json_file(file));
  if (auto* w = std::get_if<SSqWeight>(&in)) return *w;
  if (auto* raw = std::get_if<RawLabels>(&in)) {
    QfReport r = check_qf(*raw);
    if (!r.quasifinite) return std::nullopt;
    return *r.recovered;
  }
  throw ParseError(file + ": expected a (p12, p21, c) weight or raw labels, got a glinf weight");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QSIGMA_SEED");
  if (env == nullptr) return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw ParseError(std::string("QSIGMA_SEED is not an integer: ") + env);
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with the q-deformed superalgebra and its quasifinite modules", "qsigma"};
  app.require_subcommand(1);

  std::string element, lhs, rhs, s_text = "s", window_text, weight_file, module_file, convention = "adopted";
  std::string suite;
  std::size_t order = 0, cases = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> substs;
  bool as_json = false;

  auto* parse = app.add_subcommand("parse", "Parse an element and print its canonical form");
  parse->add_option("--element", element, "element text")->required();

  auto* bracket = app.add_subcommand("bracket", "Print the superbracket [lhs, rhs}");
  bracket->add_option("--lhs", lhs, "left element")->required();
  bracket->add_option("--rhs", rhs, "right element")->required();

  auto* embed = app.add_subcommand("embed", "Print a window of the centrally extended embedding");
  embed->add_option("--element", element, "element text")->required();
  embed->add_option("--s", s_text, "embedding point (default s)");
  embed->add_option("--m", order, "jet order m (default 0)");
  embed->add_option("--window", window_text, "index window A:B, half-integers as k/2")->required();
  embed->add_option("--subst", substs, "numeric specialisation name=rational (repeatable)");

  auto* qfcheck = app.add_subcommand("qfcheck", "Decide quasifiniteness of a weight file");
  qfcheck->add_option("--weight", weight_file, "weight JSON")->required();

  auto* classify = app.add_subcommand("classify", "Synthesize module descriptors for a quasifinite weight");
  classify->add_option("--weight", weight_file, "weight JSON")->required();

  auto* labels = app.add_subcommand("labels", "Labels (p12, p21, c) of a tensor product of modules");
  labels->add_option("--module", module_file, "descriptor JSON (object or array)")->required();
  labels->add_flag("--json", as_json, "print JSON");

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check that labels after synthesis reproduce the weight");
  roundtrip_cmd->add_option("--weight", weight_file, "weight JSON")->required();
  roundtrip_cmd->add_option("--convention", convention, "central charge sign: adopted or rejected")
      ->check(CLI::IsMember({"adopted", "rejected"}));

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite_names = "all";
  for (const auto& info : suite_catalog()) suite_names += ", " + info.name;
  verify->add_option("--suite", suite, "suite name: " + suite_names)->required();
  verify->add_option("--seed", seed, "seed (default $QSIGMA_SEED, else 1)");
  verify->add_option("--cases", cases, "number of cases (default per suite)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitInput;
  }

  try {
    if (parse->parsed()) {
      out << parse_element(element).str() << "\n";
      return kExitOk;
    }
    if (bracket->parsed()) {
      out << superbracket(parse_element(lhs), parse_element(rhs)).str() << "\n";
      return kExitOk;
    }
    if (embed->parsed()) {
      auto [lo, hi] = parse_window(window_text);
      std::vector<std::pair<std::size_t, mpq_class>> subs;
      for (const auto& t : substs) subs.push_back(parse_subst(t));
      if (order > 8) throw ParseError("jet order must lie in 0 .. 8");
      Scalar s = parse_scalar(s_text);
      if (s.is_zero()) throw ParseError("embedding point must be nonzero");
      DenseWindow w = window(phi_hat(parse_element(element), s, order), lo, hi);
      if (!subs.empty()) {
        for (auto& row : w.rows)
          for (auto& e : row) e = substitute(e, subs);
        w.central = substitute(w.central, subs);
      }
      out << w.str();
      return kExitOk;
    }
    if (qfcheck->parsed()) {
      WeightInput in = weight_from_json(read_json_file(weight_file));
      if (auto* w = std::get_if<SSqWeight>(&in)) {
        QfReport r = check_qf(*w);
        print_qf(out, r);
        return r.quasifinite ? kExitOk : kExitMath;
      }
      if (auto* raw = std::get_if<RawLabels>(&in)) {
        QfReport r = check_qf(*raw);
        print_qf(out, r);
        return r.quasifinite ? kExitOk : kExitMath;
      }
      GlQuasifiniteReport r = gl_quasifinite(std::get<GlWeight>(in));
      out << "quasifinite: " << (r.quasifinite ? "true" : "false") << "\n";
      for (const auto& [l, side] : r.tail_failures)
        out << "  tail relation fails: l = " << l << ", " << (side < 0 ? "k -> -inf" : "k -> +inf") << "\n";
      if (r.quasifinite)
        for (const auto& v : r.violations)
          out << "  relation fails: l = " << v.l << ", k = " << v.k.str() << ", value " << v.value.str() << "\n";
      return r.quasifinite ? kExitOk : kExitMath;
    }
    if (classify->parsed()) {
      auto w = ssq_input(weight_file);
      if (!w) {
        out << "quasifinite: false\n";
        return kExitMath;
      }
      out << to_json(synthesize(w->p12, w->p21)).dump(2) << "\n";
      return kExitOk;
    }
    if (labels->parsed()) {
      SSqWeight w = tensor_labels(descriptors_from_json(read_json_file(module_file)));
      if (as_json) {
        out << to_json(w).dump(2) << "\n";
      } else {
        out << "p12 = " << w.p12.str() << "\np21 = " << w.p21.str() << "\nc = " << w.c.str() << "\n";
      }
      return kExitOk;
    }
    if (roundtrip_cmd->parsed()) {
      auto w = ssq_input(weight_file);
      if (!w) {
        out << "quasifinite: false\n";
        return kExitMath;
      }
      RoundtripReport r =
          roundtrip(w->p12, w->p21, convention == "rejected" ? ChargeSign::kRejected : ChargeSign::kAdopted);
      out << (r.pass ? "pass" : "fail") << "\n";
      for (const auto& line : r.diff) out << "  " << line << "\n";
      return r.pass ? kExitOk : kExitMath;
    }
    if (verify->parsed()) {
      std::uint64_t sd = seed ? *seed : default_seed();
      std::vector<std::string> names;
      if (suite == "all") {
        for (const auto& info : suite_catalog()) names.push_back(info.name);
      } else {
        names.push_back(suite);
      }
      bool all_pass = true;
      for (const auto& name : names) {
        auto r = run_suite(name, sd, cases);
        if (!r) throw ParseError("unknown suite '" + name + "'; expected one of " + suite_names);
        out << r->name << ": " << (r->pass ? "pass" : "FAIL") << " (" << r->cases - r->failures << "/" << r->cases
            << " cases, seed " << sd << ")\n";
        for (const auto& n : r->notes) out << "  " << n << "\n";
        all_pass = all_pass && r->pass;
      }
      return all_pass ? kExitOk : kExitMath;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qsigma
