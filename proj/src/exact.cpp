#include "isetlab/exact.hpp"

#include <algorithm>
#include <limits>

#include "isetlab/error.hpp"

namespace isetlab {

ExactNat::ExactNat(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw ParameterError("ExactNat cannot hold a negative value: " + value_.str());
}

ExactNat ExactNat::parse(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParameterError("not a non-negative decimal integer: '" + decimal + "'");
  }
  return ExactNat(BigInt(decimal));
}

std::uint64_t ExactNat::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) throw ParameterError("value exceeds 64 bits: " + to_string());
  return value_.convert_to<std::uint64_t>();
}

ExactNat binom(std::int64_t n, std::int64_t r) {
  if (n < 0) throw ParameterError("binom: n must be non-negative, got " + std::to_string(n));
  if (r < 0 || r > n) return ExactNat{};
  r = std::min(r, n - r);
  BigInt acc = 1;
  // After step i, acc == C(n - r + i, i), so each division is exact.
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return ExactNat(std::move(acc));
}

std::vector<BigInt> binom_row(std::int64_t n, std::int64_t m) {
  if (n < 0) throw ParameterError("binom_row: n must be non-negative, got " + std::to_string(n));
  if (m < 0) return {};
  std::vector<BigInt> row(static_cast<std::size_t>(m + 1), BigInt{0});
  row[0] = 1;
  for (std::int64_t j = 0; j < m && j < n; ++j) {
    row[j + 1] = row[j] * (n - j) / (j + 1);
  }
  return row;
}

ExactNat binom_prefix_sum(std::int64_t n, std::int64_t m) {
  BigInt total = 0;
  for (const BigInt& c : binom_row(n, m)) total += c;
  return ExactNat(std::move(total));
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw ParameterError("ipow: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace isetlab
