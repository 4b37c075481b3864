#pragma once

#include <string>
#include <variant>

#include "isetlab/family.hpp"

namespace isetlab {

/// C([n], k) in canonical order.
Family build_full_level(int n, int k);

/// A_t = {A in C([n], k) : |A ∩ [t+2]| >= t+1}. Requires t+1 <= k <= n and n >= t+2.
Family build_A_t(int n, int k, int t);

/// The complete sunflower S_X: every k-subset of [n] containing `core`.
Family build_sunflower(int n, int k, const Subset& core);

/// The (t+2)-triangle {1..t+1}, {2..t+2}, {{1,t+2} ∪ D : D ⊂ {2..t+1}, |D| = t-1},
/// i.e. all (t+1)-subsets of [t+2], placed in universe [n]. Requires n >= t+2.
Family build_triangle(int n, int t);

struct SunflowerKind {
  Subset core;
  bool operator==(const SunflowerKind&) const = default;
};
struct TriangleKind {
  Subset ground;
  bool operator==(const TriangleKind&) const = default;
};
struct OtherKind {
  bool operator==(const OtherKind&) const = default;
};

using FamilyKind = std::variant<SunflowerKind, TriangleKind, OtherKind>;

std::string kind_name(const FamilyKind& kind);

/// Shape of a non-empty t-intersecting family of (t+1)-sets: a sunflower when
/// all members share a t-set (lexicographically first core wins, and the
/// sunflower label wins over the triangle label), a triangle when all members
/// fit inside one (t+2)-set, otherwise Other. Sub-triangles count as triangles.
/// Throws PreconditionError on wrong member sizes or a non-t-intersecting input.
FamilyKind classify_level_family(const Family& fam, int t);

}  // namespace isetlab
