// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_HALF_INT_HPP
#define QSIGMA_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace qsigma {

/// Element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT: implicit from int

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // floor(value)
  constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
  // ceil(value)
  constexpr std::int64_t ceil() const { return -from_twice(-twice_).floor(); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace qsigma

#endif  // QSIGMA_HALF_INT_HPP
