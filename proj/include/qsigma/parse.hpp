// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_PARSE_HPP
#define QSIGMA_PARSE_HPP

#include <string_view>

#include "qsigma/laurent.hpp"
#include "qsigma/scalar.hpp"
#include "qsigma/superq.hpp"

namespace qsigma {

// One grammar serves all three entry points: sums and products of integers,
// scalar symbols, z, T, C and the matrix units E11 E12 E21 E22, with integer
// exponents and parentheses. Products follow the associative rule of the
// operator algebra, so `z*T` and `T*z` differ by a factor of q.
//
// All of them throw ParseError (with the byte offset) on malformed input and
// on input of the wrong kind, e.g. a z-term where a scalar is expected.

Scalar parse_scalar(std::string_view text);
Laurent parse_laurent(std::string_view text);
SuperQElement parse_element(std::string_view text);

}  // namespace qsigma

#endif  // QSIGMA_PARSE_HPP
