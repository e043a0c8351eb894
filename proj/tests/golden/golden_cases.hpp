// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

// Golden CLI cases: cases.json lists {name, args, exit}; expected/<name>.out
// holds the byte-exact stdout and expected/<name>.err, when present, stderr.
// Paths in args are relative to the golden directory.

#ifndef QSIGMA_TESTS_GOLDEN_CASES_HPP
#define QSIGMA_TESTS_GOLDEN_CASES_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit = 0;
};

struct Outcome {
  int exit = 0;
  std::string out;
  std::string err;
};

inline std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<Case> load_cases(const std::filesystem::path& dir) {
  auto text = slurp(dir / "cases.json");
  if (!text) throw std::runtime_error("cannot read " + (dir / "cases.json").string());
  std::vector<Case> out;
  for (const auto& j : nlohmann::json::parse(*text))
    out.push_back({j.at("name").get<std::string>(), j.at("args").get<std::vector<std::string>>(), j.at("exit").get<int>()});
  return out;
}

// Empty string when the outcome matches, else a one-line reason.
inline std::string compare(const std::filesystem::path& dir, const Case& c, const Outcome& got) {
  if (got.exit != c.exit)
    return "exit " + std::to_string(got.exit) + ", expected " + std::to_string(c.exit);
  auto out = slurp(dir / "expected" / (c.name + ".out"));
  if (!out) return "missing expected/" + c.name + ".out";
  if (*out != got.out) return "stdout differs:\n--- expected\n" + *out + "--- got\n" + got.out;
  if (auto err = slurp(dir / "expected" / (c.name + ".err")); err && *err != got.err)
    return "stderr differs:\n--- expected\n" + *err + "--- got\n" + got.err;
  return "";
}

}  // namespace golden

#endif  // QSIGMA_TESTS_GOLDEN_CASES_HPP
