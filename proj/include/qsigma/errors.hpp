// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_ERRORS_HPP
#define QSIGMA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsigma {

// Violated mathematical precondition: division by zero, non-invertible
// scaling, inconsistent weight data and the like.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  explicit ParseError(const std::string& what)
      : std::invalid_argument(what), offset_(std::string::npos) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qsigma

#endif  // QSIGMA_ERRORS_HPP
