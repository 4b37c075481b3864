#pragma once

#include <map>
#include <optional>
#include <vector>

#include "isetlab/exact.hpp"
#include "isetlab/family.hpp"

namespace isetlab {

/// T(F): every T ⊆ [n] with |T| <= k and |T ∩ F| >= t for all members F.
/// An empty family yields every subset of size <= k.
Family transversal_family(const Family& fam, int t, int k);

/// Members with no proper subset in the family. The result is an antichain.
Family minimal_sets(const Family& fam);

/// Whether a t-intersecting family of k-sets admits no further k-set.
/// Computes both the direct "nothing is addable" test and F == T(F)^(k), and
/// throws std::logic_error if they ever disagree.
bool is_saturated(const Family& fam, int t, int k);

/// Greedy saturation: scans C([n], k) canonically and keeps every set whose
/// addition preserves t-intersection. Deterministic, but saturations are not
/// unique; see saturate_in_order.
Family saturate(const Family& fam, int t, int k);

/// Same greedy closure with a caller-chosen scan order over k-sets.
Family saturate_in_order(const Family& fam, int t, int k, const std::vector<Subset>& scan_order);

/// t-covering number: min |T| with |T ∩ B| >= t for every B. Empty input gives 0;
/// std::nullopt when some member has fewer than t elements.
std::optional<int> covering_number(const Family& b, int t);

/// Throws PreconditionError on an empty family.
int min_member_size(const Family& b);

/// Members of size exactly `l`.
Family level(const Family& b, int l);
/// Members of size at most `l`.
Family level_up_to(const Family& b, int l);

/// Least l <= k with covering_number(level_up_to(b, l), t) >= t+1.
std::optional<int> compute_alpha(const Family& b, int t, int k);

struct LevelBound {
  bool holds = false;
  ExactNat lhs;  // |B^(l)|
  ExactNat rhs;  // s * l * (k-t+1)^(l-t-1)
};

/// Evaluates |B^(l)| <= s * l * (k-t+1)^(l-t-1). The hypotheses
/// t+1 <= l <= k, s >= t+1 and tau(B^(<=l)) >= t+1 are checked; a violation
/// throws PreconditionError rather than producing a verdict.
LevelBound check_level_bound(const Family& b, int l, int k, int t);

/// Minimal generators of a saturated family and the statistics derived from them.
struct GeneratorProfile {
  Family generators;  // B(F) = minimal sets of T(F)
  int s = 0;
  std::optional<int> tau;
  std::map<int, Family> levels;
  std::optional<int> alpha;
};

GeneratorProfile generator_profile(const Family& fam, int t, int k);

}  // namespace isetlab
