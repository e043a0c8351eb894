// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_CLASSIFIER_HPP
#define QSIGMA_CLASSIFIER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsigma/glinf.hpp"
#include "qsigma/quasipoly.hpp"
#include "qsigma/upoly.hpp"

namespace qsigma {

/// Highest weight of the extended algebra, given by the quasipolynomials
///   P21(n) = D(n,1) + D(n,2),  P12(n) = D(n,1) q^n + D(n,2)   (n != 0)
/// and the central charge c with P21(0) = P12(0) + c. Here
/// D(n,i) = lambda(T^n M_ii).
struct SSqWeight {
  QuasiPolynomial p12;
  QuasiPolynomial p21;
  Scalar c;
  // (D(0,1), D(0,2)) when known individually.
  std::optional<std::pair<Scalar, Scalar>> zero_split;

  static SSqWeight zero() { return {}; }
  // Throws MathError when an invariant fails.
  void validate() const;
  SSqWeight operator+(const SSqWeight& o) const;
  bool operator==(const SSqWeight& o) const = default;
};

/// One tensor factor: the glinf[m] weight pulled back along phi-hat at s.
struct ModuleDescriptor {
  Scalar s;
  std::size_t m = 0;
  GlWeight weight;

  bool operator==(const ModuleDescriptor&) const = default;
};

/// Labels on a window [lo, hi], zero outside; D(0, i) enters only through
/// the sum D(0,1) + D(0,2).
struct RawLabels {
  long lo = 0;
  long hi = 0;
  std::map<long, Scalar> delta1;
  std::map<long, Scalar> delta2;
  Scalar c;
};

struct QfReport {
  bool quasifinite = false;
  std::optional<UPoly> b12;
  std::optional<UPoly> b21;
  // Set for raw input: the recovered weight.
  std::optional<SSqWeight> recovered;
};

QfReport check_qf(const SSqWeight& w);
/// Raw labels go through interpolate_finite; the verdict is relative to the
/// window and to max_order.
QfReport check_qf(const RawLabels& raw, std::size_t max_order = 16);

/// D(n, i) for n != 0. Throws MathError for n = 0 or i outside {1, 2}.
Scalar delta_of(const SSqWeight& w, long n, int i);

/// The functional T^n M_ii -> D(n, i), C -> c on the degree-zero part.
class WeightFunctional {
 public:
  explicit WeightFunctional(SSqWeight w);
  // Labels zero outside the window, D(0, i) given individually.
  explicit WeightFunctional(const RawLabels& raw);

  // D(n, i) including any perturbation; n = 0 requires the zero split.
  Scalar delta(long n, int i) const;
  const Scalar& c() const { return c_; }
  // Value on a z-degree-zero element. When the zero split is unknown the
  // T^0 coefficients of M11 and M22 must agree. Throws MathError otherwise.
  Scalar evaluate(const SuperQElement& x) const;
  // Adds eps to one label (n != 0) or to c.
  void perturb_label(long n, int i, const Scalar& eps);
  void perturb_charge(const Scalar& eps) { c_ += eps; }

 private:
  std::optional<SSqWeight> w_;
  std::optional<RawLabels> raw_;
  Scalar c_;
  std::map<std::pair<long, int>, Scalar> bumps_;
};

/// D(n, i) = lambda(phi-hat_s(T^n M_ii)) computed from pair sums of the
/// labels, so tails cancel and the result is a quasipolynomial. The zero
/// split is set when every tail is zero (the sums are then finite).
SSqWeight labels_of_module(const ModuleDescriptor& d);

SSqWeight tensor_labels(const std::vector<ModuleDescriptor>& ds);

enum class ChargeSign {
  kAdopted,   // c = P21(0) - P12(0)
  kRejected,  // c = P12(0) - P21(0)
};

/// One descriptor per congruence class of bases. Within a class with
/// representative s and members s q^{-k}, with H the l-th derivatives at 0
/// divided by L^l:
///   c_l = sum_k (H21_k - H12_k),
///   lambda_i = sum_{k >= i} (H21_k - H12_k) for i >= 1, 0 for i <= 0,
///   lambda_{i-1/2} = H21_i - lambda_i.
/// kRejected flips the sign of c_l.
std::vector<ModuleDescriptor> synthesize(const QuasiPolynomial& p12, const QuasiPolynomial& p21,
                                         ChargeSign sign = ChargeSign::kAdopted);

struct RoundtripReport {
  bool pass = false;
  std::vector<std::string> diff;  // one line per mismatching base or charge
  std::vector<ModuleDescriptor> descriptors;
};

RoundtripReport roundtrip(const QuasiPolynomial& p12, const QuasiPolynomial& p21,
                          ChargeSign sign = ChargeSign::kAdopted);

}  // namespace qsigma

#endif  // QSIGMA_CLASSIFIER_HPP
