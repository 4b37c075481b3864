#include "isetlab/core.hpp"

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "isetlab/error.hpp"

namespace isetlab {

Subset intersect(const Subset& a, const Subset& b) { return a & b; }

bool is_t_intersecting(const Family& fam, int t) {
  if (t < 1) throw ParameterError("t must be at least 1");
  const auto& sets = fam.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].intersection_size(sets[j]) < t) return false;
    }
  }
  return true;
}

Family distinct_intersections(const Family& fam) {
  std::unordered_set<Subset, SubsetHash> seen;
  const auto& sets = fam.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) seen.insert(sets[i] & sets[j]);
  }
  return Family(fam.universe_size(), std::vector<Subset>(seen.begin(), seen.end()));
}

bool is_antichain(const Family& fam) {
  const auto& sets = fam.sets();
  // Canonical order sorts by size, so a proper superset always comes later.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].size() < sets[j].size() && sets[i].is_subset_of(sets[j])) return false;
    }
  }
  return true;
}

Family up_closure(const Family& gen, int k) {
  const int n = gen.universe_size();
  if (k < 0 || k > n) throw ParameterError("up_closure: need 0 <= k <= n, got k=" + std::to_string(k));
  for (const Subset& g : gen) {
    if (g.size() > k) throw PreconditionError("up_closure: generator " + g.to_string() + " larger than k");
  }
  std::vector<Subset> out;
  for_each_combination(n, k, [&](const Subset& d) {
    for (const Subset& g : gen) {
      if (g.is_subset_of(d)) {
        out.push_back(d);
        break;
      }
    }
    return true;
  });
  return Family(n, std::move(out));
}

std::optional<CommonCoreSunflower> find_common_core_sunflower(const Family& fam, int t, int m) {
  if (t < 1 || m < 1) throw ParameterError("find_common_core_sunflower: need t >= 1 and m >= 1");
  if (fam.size() < static_cast<std::size_t>(m)) return std::nullopt;
  // Any common core lies inside some member, so it is enough to count the
  // t-subsets of members. std::map keeps candidates in canonical order.
  std::map<Subset, std::size_t> counts;
  for (const Subset& f : fam) {
    for_each_subset_of(f, t, [&](const Subset& x) {
      ++counts[x];
      return true;
    });
  }
  for (const auto& [core, count] : counts) {
    if (count < static_cast<std::size_t>(m)) continue;
    Family petals(fam.universe_size());
    for (const Subset& f : fam) {
      if (core.is_subset_of(f)) {
        petals.insert(f);
        if (petals.size() == static_cast<std::size_t>(m)) break;
      }
    }
    return CommonCoreSunflower{core, std::move(petals)};
  }
  return std::nullopt;
}

}  // namespace isetlab
