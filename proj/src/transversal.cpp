#include "isetlab/transversal.hpp"

#include <stdexcept>
#include <string>

#include "isetlab/core.hpp"
#include "isetlab/error.hpp"

namespace isetlab {

namespace {

bool meets_all(const Subset& candidate, const Family& fam, int t) {
  for (const Subset& f : fam) {
    if (candidate.intersection_size(f) < t) return false;
  }
  return true;
}

void require_uniform_intersecting(const Family& fam, int t, int k, const char* who) {
  for (const Subset& f : fam) {
    if (f.size() != k) throw PreconditionError(std::string(who) + ": member " + f.to_string() + " is not a k-set");
  }
  if (!is_t_intersecting(fam, t)) throw PreconditionError(std::string(who) + ": family is not t-intersecting");
}

}  // namespace

Family transversal_family(const Family& fam, int t, int k) {
  const int n = fam.universe_size();
  if (t < 1) throw ParameterError("transversal_family: t must be at least 1");
  if (k < 0 || k > n) throw ParameterError("transversal_family: need 0 <= k <= n");
  std::vector<Subset> out;
  for (int r = fam.empty() ? 0 : t; r <= k; ++r) {
    for_each_combination(n, r, [&](const Subset& cand) {
      if (meets_all(cand, fam, t)) out.push_back(cand);
      return true;
    });
  }
  return Family(n, std::move(out));
}

Family minimal_sets(const Family& fam) {
  std::vector<Subset> out;
  for (const Subset& f : fam) {
    bool minimal = true;
    // Only strictly smaller sets can be proper subsets; they precede f canonically.
    for (const Subset& g : out) {
      if (g.size() < f.size() && g.is_subset_of(f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  return Family(fam.universe_size(), std::move(out));
}

bool is_saturated(const Family& fam, int t, int k) {
  require_uniform_intersecting(fam, t, k, "is_saturated");
  bool addable = false;
  for_each_combination(fam.universe_size(), k, [&](const Subset& d) {
    if (!fam.contains(d) && meets_all(d, fam, t)) {
      addable = true;
      return false;
    }
    return true;
  });
  const bool direct = !addable;
  const bool via_transversals = level(transversal_family(fam, t, k), k) == fam;
  if (direct != via_transversals) {
    throw std::logic_error("is_saturated: direct test and T(F)^(k) characterization disagree on " + fam.to_string());
  }
  return direct;
}

Family saturate_in_order(const Family& fam, int t, int k, const std::vector<Subset>& scan_order) {
  require_uniform_intersecting(fam, t, k, "saturate");
  Family out = fam;
  for (const Subset& d : scan_order) {
    if (d.size() != k) throw ParameterError("saturate: scan order contains a set of the wrong size");
    if (!out.contains(d) && meets_all(d, out, t)) out.insert(d);
  }
  return out;
}

Family saturate(const Family& fam, int t, int k) {
  if (k < 0 || k > fam.universe_size()) throw ParameterError("saturate: need 0 <= k <= n");
  std::vector<Subset> order;
  for_each_combination(fam.universe_size(), k, [&](const Subset& d) {
    order.push_back(d);
    return true;
  });
  return saturate_in_order(fam, t, k, order);
}

std::optional<int> covering_number(const Family& b, int t) {
  if (t < 1) throw ParameterError("covering_number: t must be at least 1");
  if (b.empty()) return 0;
  Subset ground(b.universe_size());
  for (const Subset& m : b) {
    if (m.size() < t) return std::nullopt;
    ground = ground | m;
  }
  // Elements outside the union never help, so candidates come from the union only.
  for (int r = t; r <= ground.size(); ++r) {
    bool found = false;
    for_each_subset_of(ground, r, [&](const Subset& cand) {
      found = meets_all(cand, b, t);
      return !found;
    });
    if (found) return r;
  }
  return std::nullopt;  // unreachable: the whole union always works
}

int min_member_size(const Family& b) {
  if (b.empty()) throw PreconditionError("min_member_size: empty family");
  return b[0].size();  // canonical order starts with the smallest sets
}

Family level(const Family& b, int l) {
  if (l < 0) throw ParameterError("level: l must be non-negative");
  std::vector<Subset> out;
  for (const Subset& m : b) {
    if (m.size() == l) out.push_back(m);
  }
  return Family(b.universe_size(), std::move(out));
}

Family level_up_to(const Family& b, int l) {
  if (l < 0) throw ParameterError("level_up_to: l must be non-negative");
  std::vector<Subset> out;
  for (const Subset& m : b) {
    if (m.size() <= l) out.push_back(m);
  }
  return Family(b.universe_size(), std::move(out));
}

namespace {

// A missing covering number means no cover exists at all, which we read as infinite.
bool covering_at_least(const Family& b, int t, int bound) {
  const auto tau = covering_number(b, t);
  return !tau || *tau >= bound;
}

}  // namespace

std::optional<int> compute_alpha(const Family& b, int t, int k) {
  if (t < 1) throw ParameterError("compute_alpha: t must be at least 1");
  for (int l = 0; l <= k; ++l) {
    if (covering_at_least(level_up_to(b, l), t, t + 1)) return l;
  }
  return std::nullopt;
}

LevelBound check_level_bound(const Family& b, int l, int k, int t) {
  if (t < 1 || l < t + 1 || l > k) {
    throw PreconditionError("check_level_bound: need t+1 <= l <= k, got l=" + std::to_string(l));
  }
  const int s = min_member_size(b);
  if (s < t + 1) throw PreconditionError("check_level_bound: hypothesis s >= t+1 fails (s=" + std::to_string(s) + ")");
  if (!covering_at_least(level_up_to(b, l), t, t + 1)) {
    throw PreconditionError("check_level_bound: hypothesis tau(B^(<=l)) >= t+1 fails at l=" + std::to_string(l));
  }
  LevelBound out;
  out.lhs = ExactNat(static_cast<std::uint64_t>(level(b, l).size()));
  out.rhs = ExactNat(BigInt(s) * l * ipow(k - t + 1, l - t - 1));
  out.holds = out.lhs <= out.rhs;
  return out;
}

GeneratorProfile generator_profile(const Family& fam, int t, int k) {
  GeneratorProfile p;
  p.generators = minimal_sets(transversal_family(fam, t, k));
  if (!p.generators.empty()) p.s = min_member_size(p.generators);
  p.tau = covering_number(p.generators, t);
  for (const Subset& g : p.generators) {
    auto [it, inserted] = p.levels.try_emplace(g.size(), Family(fam.universe_size()));
    it->second.insert(g);
  }
  p.alpha = compute_alpha(p.generators, t, k);
  return p;
}

}  // namespace isetlab
