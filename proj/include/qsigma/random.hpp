// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_RANDOM_HPP
#define QSIGMA_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "qsigma/classifier.hpp"
#include "qsigma/glinf.hpp"
#include "qsigma/quasipoly.hpp"
#include "qsigma/superq.hpp"

namespace qsigma {

/// Seeded generators for the property suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }

  // Small integer, sometimes times q^{+-1} or s.
  Scalar scalar();
  // Up to `terms` monomials with exponents in [lo, hi].
  Laurent laurent(long lo, long hi, int terms = 2);
  // Parity-homogeneous element with z-degrees in [n_lo, n_hi]; even
  // elements carry a central part when `central` is set.
  SuperQElement element(int parity, long n_lo, long n_hi, bool central = false);
  // Mixed parity, with fractional coefficients; for printer round trips.
  SuperQElement any_element();
  // At most `bases` bases drawn from a fixed pool, polynomial degree <= deg.
  QuasiPolynomial quasipolynomial(int bases, int deg);
  // Finite-support weight (tails zero) with exceptions in [-2, 3].
  ModuleDescriptor descriptor(const Scalar& s, std::size_t m);
  // Random tails, consistent with probability ~ 0.7, exceptions in [-4, 4].
  GlWeight gl_weight(std::size_t m);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qsigma

#endif  // QSIGMA_RANDOM_HPP
