#pragma once

#include <optional>

#include "isetlab/family.hpp"
#include "isetlab/subset.hpp"

namespace isetlab {

Subset intersect(const Subset& a, const Subset& b);

/// Every pair of distinct members shares at least t elements.
/// Families with at most one member are vacuously t-intersecting.
bool is_t_intersecting(const Family& fam, int t);

/// I(F): the deduplicated family of F ∩ G over distinct members F, G.
/// The empty set is kept when two members are disjoint.
Family distinct_intersections(const Family& fam);

/// No member is a proper subset of another.
bool is_antichain(const Family& fam);

/// All k-subsets of [n] that contain at least one member of `gen`.
Family up_closure(const Family& gen, int k);

struct CommonCoreSunflower {
  Subset core;
  Family petals;
};

/// Looks for a t-set X contained in at least m members of `fam` (the
/// common-core notion of a sunflower, not the pairwise-equal-core one).
/// Returns the lexicographically first such X together with the first m
/// members that contain it.
std::optional<CommonCoreSunflower> find_common_core_sunflower(const Family& fam, int t, int m);

}  // namespace isetlab
