// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the CLI binary on every golden case.
//   golden_runner <qsigma> <golden-dir> [--update]
// --update rewrites the expected files from the current outputs.

#include <sys/wait.h>
#include <unistd.h>

#include <cstring>
#include <iostream>

#include "golden_cases.hpp"

namespace {

std::string drain(int fd) {
  std::string s;
  char buf[4096];
  ssize_t n;
  while ((n = read(fd, buf, sizeof buf)) > 0) s.append(buf, static_cast<std::size_t>(n));
  close(fd);
  return s;
}

golden::Outcome run(const std::string& bin, const std::filesystem::path& dir, const std::vector<std::string>& args) {
  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) throw std::runtime_error("pipe failed");
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    dup2(out_pipe[1], 1);
    dup2(err_pipe[1], 2);
    close(out_pipe[0]);
    close(err_pipe[0]);
    if (chdir(dir.c_str()) != 0) _exit(127);
    std::vector<char*> argv{const_cast<char*>(bin.c_str())};
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execv(bin.c_str(), argv.data());
    _exit(127);
  }
  close(out_pipe[1]);
  close(err_pipe[1]);
  // Outputs are small, so draining stdout before stderr cannot deadlock.
  golden::Outcome o;
  o.out = drain(out_pipe[0]);
  o.err = drain(err_pipe[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  o.exit = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_runner <qsigma> <golden-dir> [--update]\n";
    return 2;
  }
  std::string bin = std::filesystem::absolute(argv[1]).string();
  std::filesystem::path dir = argv[2];
  bool update = argc > 3 && std::strcmp(argv[3], "--update") == 0;

  int failed = 0;
  auto cases = golden::load_cases(dir);
  for (const auto& c : cases) {
    golden::Outcome got = run(bin, dir, c.args);
    if (update) {
      std::ofstream(dir / "expected" / (c.name + ".out"), std::ios::binary) << got.out;
      std::cout << c.name << ": exit " << got.exit << "\n";
      continue;
    }
    std::string why = golden::compare(dir, c, got);
    std::cout << (why.empty() ? "ok   " : "FAIL ") << c.name << "\n";
    if (!why.empty()) {
      std::cout << why << "\n";
      ++failed;
    }
  }
  std::cout << cases.size() - static_cast<std::size_t>(failed) << "/" << cases.size() << " golden cases match\n";
  return failed == 0 ? 0 : 1;
}
