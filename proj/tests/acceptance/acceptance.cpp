// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion, each with its time limit.
//   acceptance [--criterion N] [--seed S]
// The seed defaults to $QSIGMA_SEED, else 1. Exit status 0 iff every
// selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "qsigma/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::size_t min_cases;
  double limit_s;
};

const Criterion kCriteria[] = {
    {1, "algebra axioms (super-antisymmetry, extended super-Jacobi)", "axioms", 500, 30},
    {2, "associative product vs. action on the superline", "product", 200, 10},
    {3, "cocycle pullback psi = C(phi x, phi y)", "pullback", 200, 10},
    {4, "phi-hat is a homomorphism, m = 0, 1, 2", "homomorphism", 200, 60},
    {5, "intertwining and principal gradation", "intertwining", 100, 10},
    {6, "minimal annihilators of quasipolynomials", "annihilator", 100, 20},
    {7, "singular vectors from the annihilators; perturbations rejected", "linkage", 20, 30},
    {8, "glinf quasifiniteness vs. direct scan", "glqf", 100, 10},
    {9, "labels after synthesis round trip; rejected sign fixture", "roundtrip", 10, 60},
    {10, "SP2 windowed check", "sp2", 90, 10},
    {11, "CLI goldens and print/parse round trip", "printer", 200, 10},
};

struct GoldenResult {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;
};

GoldenResult run_goldens() {
  GoldenResult r;
  std::filesystem::path dir = QSIGMA_GOLDEN_DIR;
  auto saved = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  for (const auto& c : golden::load_cases(dir)) {
    std::ostringstream out, err;
    golden::Outcome o;
    o.exit = qsigma::run_cli(c.args, out, err);
    o.out = out.str();
    o.err = err.str();
    std::string why = golden::compare(dir, c, o);
    ++r.total;
    if (!why.empty()) {
      ++r.failed;
      if (r.first.empty()) r.first = c.name + ": " + why.substr(0, why.find('\n'));
    }
  }
  std::filesystem::current_path(saved);
  return r;
}

bool run(const Criterion& c, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  auto res = qsigma::run_suite(c.suite, seed, c.min_cases);
  bool ok = res && res->pass && res->cases >= c.min_cases;
  std::vector<std::string> notes = res ? res->notes : std::vector<std::string>{"suite missing"};
  std::size_t cases = res ? res->cases : 0, failures = res ? res->failures : 0;
  if (c.id == 11) {
    GoldenResult g = run_goldens();
    ok = ok && g.failed == 0;
    notes.push_back("golden CLI cases: " + std::to_string(g.total - g.failed) + "/" + std::to_string(g.total) +
                    " byte-exact");
    if (!g.first.empty()) notes.push_back("first golden mismatch: " + g.first);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < c.limit_s;
  std::cout << "[" << std::setw(2) << c.id << "] " << (ok && in_time ? "PASS" : "FAIL") << "  " << c.title << "  ("
            << cases - failures << "/" << cases << " cases, " << std::fixed << std::setprecision(2) << secs << " s of "
            << std::setprecision(0) << c.limit_s << " s" << (in_time ? "" : ", over the limit") << ")\n";
  for (const auto& n : notes) std::cout << "       " << n << "\n";
  return ok && in_time;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("QSIGMA_SEED")) seed = std::strtoull(env, nullptr, 10);
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--criterion") == 0) {
      only = std::atoi(argv[i + 1]);
    } else if (std::strcmp(argv[i], "--seed") == 0) {
      seed = std::strtoull(argv[i + 1], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--seed S]\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& c : kCriteria)
    if (only == 0 || only == c.id) all = run(c, seed) && all;
  return all ? 0 : 1;
}
