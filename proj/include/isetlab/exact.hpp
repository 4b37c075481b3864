#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isetlab {

/// Signed arbitrary-precision integer, used where formulas subtract binomials.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision non-negative integer. Every count in the library is one.
class ExactNat {
 public:
  ExactNat() = default;
  ExactNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws ParameterError when `v` is negative.
  explicit ExactNat(BigInt v);

  /// Parses a decimal string.
  static ExactNat parse(const std::string& decimal);

  const BigInt& value() const noexcept { return value_; }
  std::string to_string() const { return value_.str(); }
  /// Throws ParameterError if the value does not fit.
  std::uint64_t to_u64() const;
  double to_double() const { return value_.convert_to<double>(); }

  ExactNat& operator+=(const ExactNat& o) {
    value_ += o.value_;
    return *this;
  }
  ExactNat& operator*=(const ExactNat& o) {
    value_ *= o.value_;
    return *this;
  }
  friend ExactNat operator+(ExactNat a, const ExactNat& b) { return a += b; }
  friend ExactNat operator*(ExactNat a, const ExactNat& b) { return a *= b; }

  friend bool operator==(const ExactNat& a, const ExactNat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactNat& a, const ExactNat& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

/// C(n, r) exactly. Zero when r < 0 or r > n; throws ParameterError for n < 0.
ExactNat binom(std::int64_t n, std::int64_t r);

/// C(n, 0), ..., C(n, m) built with the multiplicative recurrence (entries past n are 0).
std::vector<BigInt> binom_row(std::int64_t n, std::int64_t m);

/// Sum_{j=0}^{m} C(n, j); zero for m < 0 (empty sum).
ExactNat binom_prefix_sum(std::int64_t n, std::int64_t m);

/// base^exp for small non-negative exponents.
BigInt ipow(std::int64_t base, std::int64_t exp);

}  // namespace isetlab
