#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace rps {

/// Exact non-negative integer of arbitrary size. Permutation counts and the
/// F function overflow 64 bits well before n = 20, so every count in this
/// library is carried as a BigCount and only converted to floating point at
/// the final log.
class BigCount {
 public:
  BigCount() : value_(0) {}
  BigCount(unsigned long v) : value_(v) {}  // NOLINT: implicit by design

  BigCount& operator+=(const BigCount& rhs);
  BigCount& operator*=(const BigCount& rhs);
  /// Subtraction; throws std::domain_error if the result would be negative.
  BigCount& operator-=(const BigCount& rhs);

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }
  friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }

  bool operator==(const BigCount& rhs) const { return value_ == rhs.value_; }
  std::strong_ordering operator<=>(const BigCount& rhs) const;

  bool is_zero() const { return value_ == 0; }

  /// Exact quotient; the divisor must divide evenly (factorial ratios do).
  BigCount exact_div(const BigCount& divisor) const;

  static BigCount pow2(unsigned exponent);

  std::string str() const { return value_.get_str(); }

  /// Nearest double; loses precision above 2^53, overflows to inf beyond
  /// double range.
  double to_double() const { return value_.get_d(); }

  /// log2 computed from the exponent and truncated mantissa, so it stays
  /// accurate to ~1 ulp no matter how large the integer is.
  double log2() const;

  /// log in an arbitrary base > 1; throws std::domain_error on a bad base
  /// or a zero value.
  double log(double base) const;

 private:
  explicit BigCount(mpz_class v) : value_(std::move(v)) {}

  mpz_class value_;
};

}  // namespace rps
