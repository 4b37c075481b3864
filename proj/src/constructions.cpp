#include "isetlab/constructions.hpp"

#include <vector>

#include "isetlab/core.hpp"
#include "isetlab/error.hpp"

namespace isetlab {

Family build_full_level(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw ParameterError("build_full_level: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  std::vector<Subset> sets;
  for_each_combination(n, k, [&](const Subset& s) {
    sets.push_back(s);
    return true;
  });
  return Family(n, std::move(sets));
}

Family build_A_t(int n, int k, int t) {
  Params::make(n, k, t);
  if (k < t + 1 || n < t + 2) {
    throw ParameterError("build_A_t: need t+1 <= k <= n and n >= t+2");
  }
  const Subset head = Subset::prefix(n, t + 2);
  std::vector<Subset> sets;
  for_each_combination(n, k, [&](const Subset& a) {
    if (a.intersection_size(head) >= t + 1) sets.push_back(a);
    return true;
  });
  return Family(n, std::move(sets));
}

Family build_sunflower(int n, int k, const Subset& core) {
  if (core.universe_size() != n) throw ParameterError("build_sunflower: core universe does not match n");
  const int t = core.size();
  if (t > k || k > n) throw ParameterError("build_sunflower: need |core| <= k <= n");
  std::vector<Subset> sets;
  for_each_subset_of(Subset::prefix(n, n) - core, k - t, [&](const Subset& petal) {
    sets.push_back(core | petal);
    return true;
  });
  return Family(n, std::move(sets));
}

Family build_triangle(int n, int t) {
  if (t < 1 || n < t + 2) throw ParameterError("build_triangle: need t >= 1 and n >= t+2");
  Family tri(n);
  Subset low(n), high(n);
  for (int e = 1; e <= t + 1; ++e) low.insert(e);
  for (int e = 2; e <= t + 2; ++e) high.insert(e);
  tri.insert(low);
  tri.insert(high);
  Subset middle(n);
  for (int e = 2; e <= t + 1; ++e) middle.insert(e);
  for_each_subset_of(middle, t - 1, [&](const Subset& d) {
    Subset s = d;
    s.insert(1);
    s.insert(t + 2);
    tri.insert(s);
    return true;
  });
  return tri;
}

std::string kind_name(const FamilyKind& kind) {
  if (std::holds_alternative<SunflowerKind>(kind)) return "sunflower";
  if (std::holds_alternative<TriangleKind>(kind)) return "triangle";
  return "other";
}

FamilyKind classify_level_family(const Family& fam, int t) {
  if (t < 1) throw ParameterError("classify_level_family: t must be at least 1");
  if (fam.empty()) throw PreconditionError("classify_level_family: empty family");
  for (const Subset& f : fam) {
    if (f.size() != t + 1) {
      throw PreconditionError("classify_level_family: member " + f.to_string() + " is not a (t+1)-set");
    }
  }
  if (!is_t_intersecting(fam, t)) throw PreconditionError("classify_level_family: family is not t-intersecting");

  Subset common = fam[0];
  Subset ground = fam[0];
  for (const Subset& f : fam) {
    common = common & f;
    ground = ground | f;
  }
  if (common.size() >= t) {
    const std::vector<int> elems = common.elements();
    return SunflowerKind{Subset::of(fam.universe_size(), std::span<const int>(elems.data(), static_cast<std::size_t>(t)))};
  }
  if (ground.size() == t + 2) return TriangleKind{ground};
  return OtherKind{};
}

}  // namespace isetlab
