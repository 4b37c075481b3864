#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "isetlab/exact.hpp"

namespace isetlab {

using Rational = boost::rational<std::int64_t>;

/// Both sides of the threshold inequality at one n:
///   lhs = sum_{l=t+2}^{k} l^2 (k-t+1)^(l-t-1) sum_{i=t}^{l} C(l,i) sum_{j=0}^{k-l} C(n,j)
///   rhs = C(n-t-1,k-t-1) + a C(n-t-2,k-t-1) + b sum_{j<=k-t-2} C(n-t-2,j) + sum_{j<=k-t-3} C(n-t-2,j)
/// with a = ((t+2)(t+1)-4)/2 and b = ((t+3)(t+2)-8)/2.
struct ThresholdVerdict {
  std::int64_t n = 0;
  int k = 0;
  int t = 0;
  ExactNat lhs;
  ExactNat rhs;
  bool holds = false;  // lhs <= rhs
};

/// The integer coefficients a and b above. Both numerators are even for every t >= 1.
std::int64_t threshold_coefficient_a(std::int64_t t);
std::int64_t threshold_coefficient_b(std::int64_t t);

/// Requires t >= 1, k >= t+2 and n >= t+2.
ThresholdVerdict eval_threshold_sides(std::int64_t n, int k, int t);

/// Walks n = start, start+1, ... keeping the needed binomial rows up to date
/// with Pascal additions instead of recomputing them, so each step costs O(k)
/// big-integer additions.
class ThresholdScanner {
 public:
  ThresholdScanner(int k, int t, std::int64_t start);

  std::int64_t n() const noexcept { return n_; }
  ThresholdVerdict verdict() const;
  void advance();

 private:
  int k_;
  int t_;
  std::int64_t n_;
  std::vector<BigInt> layer_weights_;  // indexed by k-l, l = t+2..k
  std::vector<BigInt> row_n_;          // C(n, 0..k-t-2)
  std::vector<BigInt> row_shifted_;    // C(n-t-2, 0..k-t-1)
};

/// Least n >= k such that the inequality holds at n and at every n' in
/// (n, n + confirm_window]. A linear scan: when a violation shows up inside the
/// window the search resumes right after it. Requires k >= t+2, t >= 1, window >= 0.
std::int64_t f_min(int k, int t, int confirm_window = 16);

/// (10+t) / (2(k-t-2)); throws ParameterError when k <= t+2.
Rational epsilon_of(int k, int t);

struct ConstantT {
  int t = 1;
};
struct PowerT {
  Rational exponent;  // t ≈ k^exponent
};
struct LinearT {
  Rational slope;  // t ≈ slope * k
};
using RegimeSpec = std::variant<ConstantT, PowerT, LinearT>;

/// Parses "const:T", "power:E" or "linear:C" (E and C as decimals or fractions a/b).
RegimeSpec parse_regime(const std::string& text);
std::string regime_name(const RegimeSpec& spec);

/// t for a given k: the constant, or round(k^E) / round(C*k) clamped to [1, k-3].
int regime_t(const RegimeSpec& spec, int k);

/// Growth exponent(s) for f(k,t) in the given regime at this k. Two candidates
/// are returned for PowerT at exactly 1/4, where the cases meet.
std::vector<Rational> expected_exponents(const RegimeSpec& spec, int k);

struct RegimePoint {
  int k = 0;
  int t = 0;
  std::optional<std::int64_t> f_min;
  std::vector<Rational> expected;
  /// log(f_i / f_{i-1}) / log(k_i / k_{i-1}) against the previous successful point.
  std::optional<double> local_exponent;
  std::optional<std::string> error;
};

/// Computes f_min along `k_values` and the local growth exponents between
/// consecutive points. Nothing is asserted here; invalid points carry `error`.
std::vector<RegimePoint> fit_regime_exponent(const RegimeSpec& spec, const std::vector<int>& k_values,
                                             int confirm_window = 16);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace isetlab
