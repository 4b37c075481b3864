#include "isetlab/decomposition.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "isetlab/counting.hpp"
#include "isetlab/error.hpp"
#include "isetlab/transversal.hpp"

namespace isetlab {

LayeredFamily partition_by_generator(const Family& fam, const Family& generators) {
  if (generators.empty()) throw PreconditionError("partition_by_generator: no generators");
  LayeredFamily out;
  out.base = fam;
  out.s = min_member_size(generators);
  out.k = fam.empty() ? out.s : fam[0].size();
  for (int l = out.s; l <= out.k; ++l) out.layers.emplace(l, Family(fam.universe_size()));
  for (const Subset& f : fam) {
    if (f.size() != out.k) throw PreconditionError("partition_by_generator: family is not uniform");
    int best = -1;
    for (const Subset& b : generators) {
      if (b.size() > best && b.is_subset_of(f)) best = b.size();
    }
    if (best < 0) throw PreconditionError("partition_by_generator: " + f.to_string() + " contains no generator");
    out.layers.at(best).insert(f);
  }
  return out;
}

Family intersection_layer(const LayeredFamily& layered, int l) {
  if (l < layered.s || l > layered.k) {
    throw ParameterError("intersection_layer: layer " + std::to_string(l) + " outside [s, k]");
  }
  std::unordered_set<Subset, SubsetHash> seen;
  for (const Subset& f : layered.layers.at(l)) {
    for (int lower = layered.s; lower <= l; ++lower) {
      for (const Subset& g : layered.layers.at(lower)) {
        if (f != g) seen.insert(f & g);
      }
    }
  }
  return Family(layered.base.universe_size(), std::vector<Subset>(seen.begin(), seen.end()));
}

namespace {

BigInt upper_tail(std::int64_t l, std::int64_t t) {
  BigInt total = 0;
  for (std::int64_t i = t; i <= l; ++i) total += binom(l, i).value();
  return total;
}

}  // namespace

ExactNat eval_Il_bound(int n, int k, int t, int l, int s) {
  if (t < 1 || l < t + 1 || l > k || s < 1 || n < 0) {
    throw ParameterError("eval_Il_bound: need t+1 <= l <= k and s >= 1");
  }
  const BigInt v = BigInt(s) * l * ipow(k - t + 1, l - t - 1) * upper_tail(l, t) * binom_prefix_sum(n, k - l).value();
  return ExactNat(v);
}

BigInt eval_upper_layers_bound(int n, int k, int t, int from) {
  if (t < 1 || from < t + 2 || n < 0) throw ParameterError("eval_upper_layers_bound: need t >= 1 and from >= t+2");
  const std::vector<BigInt> row = binom_row(n, std::max(0, k - from));
  BigInt total = 0;
  BigInt prefix = 0;
  std::vector<BigInt> prefixes;
  for (const BigInt& c : row) {
    prefix += c;
    prefixes.push_back(prefix);
  }
  for (int l = from; l <= k; ++l) {
    total += BigInt(l) * l * ipow(k - t + 1, l - t - 1) * upper_tail(l, t) * prefixes[static_cast<std::size_t>(k - l)];
  }
  return total;
}

BigInt eval_total_bound(int n, int k, int t) {
  Params::make(n, k, t);
  if (k < t + 2 || n < t + 2) throw ParameterError("eval_total_bound: need k >= t+2 and n >= t+2");
  return sunflower_chain_forms(n, k, t)[3] + eval_upper_layers_bound(n, k, t, t + 2);
}

}  // namespace isetlab
