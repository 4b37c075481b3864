#include "isetlab/harness.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "isetlab/core.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/decomposition.hpp"
#include "isetlab/error.hpp"
#include "isetlab/transversal.hpp"

namespace isetlab {

namespace {

// Fixed-width bitset over graph vertices.
class VertexSet {
 public:
  explicit VertexSet(std::size_t vertices) : words_((vertices + 63) / 64, 0) {}

  void set(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count_and(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Subset> vertices, int t, int n, const std::function<void(const Family&)>& visit)
      : vertices_(std::move(vertices)), n_(n), visit_(visit) {
    const std::size_t m = vertices_.size();
    adjacency_.assign(m, VertexSet(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (vertices_[a].intersection_size(vertices_[b]) >= t) {
          adjacency_[a].set(b);
          adjacency_[b].set(a);
        }
      }
    }
  }

  void run() {
    const std::size_t m = vertices_.size();
    VertexSet all(m);
    for (std::size_t v = 0; v < m; ++v) all.set(v);
    std::vector<std::size_t> clique;
    expand(clique, all, VertexSet(m));
  }

 private:
  void expand(std::vector<std::size_t>& clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.none() && excluded.none()) {
      std::vector<Subset> members;
      members.reserve(clique.size());
      for (std::size_t v : clique) members.push_back(vertices_[v]);
      visit_(Family(n_, std::move(members)));
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = candidates.count_and(adjacency_[u]);
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    std::vector<std::size_t> branch;
    candidates.minus(adjacency_[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });
    for (std::size_t v : branch) {
      clique.push_back(v);
      expand(clique, candidates & adjacency_[v], excluded & adjacency_[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  }

  std::vector<Subset> vertices_;
  int n_;
  const std::function<void(const Family&)>& visit_;
  std::vector<VertexSet> adjacency_;
};

}  // namespace

void for_each_maximal_family(int n, int k, int t, const std::function<void(const Family&)>& visit,
                             std::uint64_t vertex_budget) {
  Params::make(n, k, t);
  const ExactNat vertices = binom(n, k);
  if (vertices > ExactNat(vertex_budget)) {
    throw BudgetError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + vertices.to_string() +
                      " vertices exceeds the budget of " + std::to_string(vertex_budget));
  }
  std::vector<Subset> level;
  for_each_combination(n, k, [&](const Subset& s) {
    level.push_back(s);
    return true;
  });
  CliqueSearch(std::move(level), t, n, visit).run();
}

std::vector<Family> enumerate_maximal_families(int n, int k, int t, std::uint64_t vertex_budget) {
  std::vector<Family> out;
  for_each_maximal_family(n, k, t, [&](const Family& f) { out.push_back(f); }, vertex_budget);
  std::sort(out.begin(), out.end());
  return out;
}

bool AuditRecord::all_ok() const {
  const auto ok = [](const std::optional<bool>& v) { return !v || *v; };
  return lemma21_antichain && lemma21_upclosure && lemma21_nosunflower && layer_cover_ok && ok(eq1_ok) &&
         ok(eq4_ok) && ok(eq5_ok) && ok(eq6_alpha_ok) && ok(eq6_relaxed_ok) && ok(eq7_ok);
}

namespace {

void and_into(std::optional<bool>& slot, bool verdict) { slot = slot.value_or(true) && verdict; }

std::size_t union_size(const std::map<int, Family>& layers, int from, int to) {
  std::unordered_set<Subset, SubsetHash> seen;
  for (const auto& [l, fam] : layers) {
    if (l < from || l > to) continue;
    seen.insert(fam.begin(), fam.end());
  }
  return seen.size();
}

}  // namespace

AuditRecord audit_proof_inequalities(const Family& fam, int t, std::size_t family_id) {
  if (fam.empty()) throw PreconditionError("audit: empty family");
  const int n = fam.universe_size();
  const int k = fam[0].size();
  if (!is_saturated(fam, t, k)) throw PreconditionError("audit: family is not saturated");

  AuditRecord rec;
  rec.family_id = family_id;
  rec.n = n;
  rec.k = k;
  rec.t = t;
  rec.family_size = fam.size();

  const GeneratorProfile profile = generator_profile(fam, t, k);
  const Family& gens = profile.generators;
  rec.lemma21_antichain = is_antichain(gens) && is_t_intersecting(gens, t);
  rec.lemma21_upclosure = up_closure(gens, k) == fam;
  rec.lemma21_nosunflower = !find_common_core_sunflower(gens, t, k + 1).has_value();
  rec.s = profile.s;
  rec.tau = profile.tau;
  rec.alpha = profile.alpha;
  rec.complete_sunflower = profile.s == t;
  rec.hypotheses_met = profile.s >= t + 1 && profile.alpha.has_value();

  if (k == t + 1) {
    rec.classification = classify_level_family(fam, t);
  } else if (const Family top = level(gens, t + 1); !top.empty()) {
    rec.classification = classify_level_family(top, t);
  }

  const Family all_intersections = distinct_intersections(fam);
  rec.intersections = all_intersections.size();
  const LayeredFamily layered = partition_by_generator(fam, gens);
  std::map<int, Family> inter;
  std::size_t layer_total = 0;
  for (int l = layered.s; l <= layered.k; ++l) {
    inter.emplace(l, intersection_layer(layered, l));
    layer_total += inter.at(l).size();
  }
  {
    std::vector<Subset> merged;
    for (const auto& [l, f] : inter) merged.insert(merged.end(), f.begin(), f.end());
    rec.layer_cover_ok = Family(n, std::move(merged)) == all_intersections && rec.intersections <= layer_total;
  }

  if (!rec.hypotheses_met) return rec;
  const int alpha = *profile.alpha;

  for (int l = std::max(t + 1, alpha); l <= k; ++l) and_into(rec.eq1_ok, check_level_bound(gens, l, k, t).holds);

  for (int l = std::max(t + 2, alpha); l <= k; ++l) {
    if (layered.layers.at(l).empty()) continue;
    and_into(rec.eq4_ok, ExactNat(static_cast<std::uint64_t>(inter.at(l).size())) <= eval_Il_bound(n, k, t, l, rec.s));
  }

  rec.eq5_ok = ExactNat(static_cast<std::uint64_t>(union_size(inter, 0, alpha - 1))) <= count_I_sunflower(n, k, t);

  // The remaining bounds belong to the branch where B^(t+1) is not triangle-like.
  if (k >= t + 2 && alpha >= t + 2) {
    const BigInt upper = static_cast<std::uint64_t>(union_size(inter, alpha, k));
    rec.eq6_alpha_ok = upper < eval_upper_layers_bound(n, k, t, alpha);
    rec.eq6_relaxed_ok = upper < eval_upper_layers_bound(n, k, t, t + 2);
    rec.eq7_ok = BigInt(static_cast<std::uint64_t>(rec.intersections)) < eval_total_bound(n, k, t);
  }
  return rec;
}

ExtremalReport extremal_report(int n, int k, int t, const ReportOptions& options) {
  ExtremalReport report;
  report.n = n;
  report.k = k;
  report.t = t;
  const std::vector<Family> families = enumerate_maximal_families(n, k, t, options.vertex_budget);
  report.num_maximal = families.size();
  std::vector<std::size_t> sizes;
  sizes.reserve(families.size());
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Family& f = families[i];
    sizes.push_back(distinct_intersections(f).size());
    report.max_I = std::max(report.max_I, sizes.back());
    if (k == t + 1) ++report.kinds[kind_name(classify_level_family(f, t))];
    if (options.audit) report.audits.push_back(audit_proof_inequalities(f, t, i));
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (sizes[i] != report.max_I) continue;
    ++report.num_argmax;
    if (report.argmax_families.size() < options.argmax_cap) report.argmax_families.push_back(families[i]);
  }
  if (k >= t + 1 && n >= 2 * k - t) {
    report.count_I_At = count_I_At(n, k, t);
    report.at_is_max = ExactNat(static_cast<std::uint64_t>(report.max_I)) <= *report.count_I_At;
  }
  return report;
}

}  // namespace isetlab
