#include "isetlab/counting.hpp"

#include <string>

#include "isetlab/error.hpp"
#include "isetlab/family.hpp"

namespace isetlab {

namespace {

std::string triple(int n, int k, int t) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")";
}

BigInt prefix(std::int64_t n, std::int64_t m) { return binom_prefix_sum(n, m).value(); }
BigInt c(std::int64_t n, std::int64_t r) { return binom(n, r).value(); }

}  // namespace

ExactNat count_I_At(int n, int k, int t) {
  Params::make(n, k, t);
  if (k < t + 1 || n < 2 * k - t) {
    throw ParameterError("count_I_At requires k >= t+1 and n >= 2k-t, got " + triple(n, k, t));
  }
  const std::int64_t base = n - t - 2;
  const BigInt total = c(t + 2, t) * prefix(base, k - t - 1) + c(t + 2, t + 1) * prefix(base, k - t - 2) +
                       prefix(base, k - t - 3);
  return ExactNat(total);
}

ExactNat count_I_sunflower(int n, int k, int t) {
  Params::make(n, k, t);
  return binom_prefix_sum(n - t, k - t - 1);
}

std::array<BigInt, 4> sunflower_chain_forms(int n, int k, int t) {
  Params::make(n, k, t);
  if (n < t + 2) throw ParameterError("sunflower chain requires n >= t+2, got " + triple(n, k, t));
  const std::int64_t m = k - t - 1;
  const std::int64_t n1 = n - t - 1;
  const std::int64_t n2 = n - t - 2;
  return {
      prefix(n - t, m),
      2 * prefix(n1, m) - c(n1, m),
      4 * prefix(n2, m) - 2 * c(n2, m) - c(n1, m),
      2 * c(n2, m) + 4 * prefix(n2, m - 1) - c(n1, m),
  };
}

bool sunflower_chain_check(int n, int k, int t) {
  if (t < 1 || t > k || k > n || n < t + 2) return false;
  const auto forms = sunflower_chain_forms(n, k, t);
  return forms[0] >= 0 && forms[0] == forms[1] && forms[1] == forms[2] && forms[2] == forms[3];
}

ExactNat ekr_bound(int n, int k, int t) {
  Params::make(n, k, t);
  return binom(n - t, k - t);
}

}  // namespace isetlab
