#pragma once

#include <map>

#include "isetlab/exact.hpp"
#include "isetlab/family.hpp"

namespace isetlab {

/// A k-uniform family split by the size of the largest generator each member
/// contains. `layers` has an entry, possibly empty, for every l in [s, k].
struct LayeredFamily {
  Family base;
  std::map<int, Family> layers;
  int s = 0;
  int k = 0;
};

/// Places each member F in layer max{|B| : B in generators, B ⊆ F}.
/// Throws PreconditionError if a member contains no generator or the family is not uniform.
LayeredFamily partition_by_generator(const Family& fam, const Family& generators);

/// I_l = {F ∩ G : F in layer l, G in layers s..l, F != G}.
/// Throws ParameterError when l is outside [s, k].
Family intersection_layer(const LayeredFamily& layered, int l);

/// s * l * (k-t+1)^(l-t-1) * sum_{i=t}^{l} C(l, i) * sum_{j=0}^{k-l} C(n, j).
/// Requires t+1 <= l <= k and s >= 1.
ExactNat eval_Il_bound(int n, int k, int t, int l, int s);

/// sum_{l=from}^{k} l^2 (k-t+1)^(l-t-1) sum_{i=t}^{l} C(l, i) sum_{j=0}^{k-l} C(n, j);
/// empty (zero) when from > k. Requires from >= t+2.
BigInt eval_upper_layers_bound(int n, int k, int t, int from);

/// Right-hand side of the total bound on |I(F)|:
///   2 C(n-t-2, k-t-1) + 4 sum_{j<=k-t-2} C(n-t-2, j) - C(n-t-1, k-t-1)
///   + eval_upper_layers_bound(n, k, t, t+2).
/// Signed on purpose: a negative value would itself be a finding. Requires k >= t+2, n >= t+2, k <= n.
BigInt eval_total_bound(int n, int k, int t);

}  // namespace isetlab
