#include <doctest.h>

#include "isetlab/constructions.hpp"
#include "isetlab/core.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/decomposition.hpp"
#include "isetlab/error.hpp"
#include "isetlab/harness.hpp"
#include "isetlab/transversal.hpp"
#include "oracles.hpp"

using namespace isetlab;

namespace {

Family fam(int n, std::vector<std::vector<int>> lists) { return Family::from_lists(n, lists); }

// Right-hand side of the total bound written out term by term.
oracle::Big total_bound_reference(long n, long k, long t) {
  const oracle::Pascal c(static_cast<int>(n + 2));
  oracle::Big v = 2 * c(n - t - 2, k - t - 1) - c(n - t - 1, k - t - 1);
  for (long j = 0; j <= k - t - 2; ++j) v += 4 * c(n - t - 2, j);
  for (long l = t + 2; l <= k; ++l) {
    oracle::Big term = l * l;
    for (long e = 0; e < l - t - 1; ++e) term *= (k - t + 1);
    oracle::Big tail = 0, ext = 0;
    for (long i = t; i <= l; ++i) tail += c(l, i);
    for (long j = 0; j <= k - l; ++j) ext += c(n, j);
    v += term * tail * ext;
  }
  return v;
}

}  // namespace

TEST_CASE("partition_by_generator") {
  const Family star = fam(4, {{1, 2}, {1, 3}, {1, 4}});
  const LayeredFamily a = partition_by_generator(star, fam(4, {{1}}));
  CHECK(a.s == 1);
  CHECK(a.k == 2);
  CHECK(a.layers.at(1) == star);
  CHECK(a.layers.at(2).empty());

  const Family tri = build_triangle(3, 1);
  const LayeredFamily b = partition_by_generator(tri, tri);
  CHECK(b.layers.size() == 1);
  CHECK(b.layers.at(2) == tri);

  const Family gens = fam(4, {{1}, {2, 3}});
  const Family up = up_closure(gens, 2);
  CHECK(up == fam(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}));
  const LayeredFamily c = partition_by_generator(up, gens);
  CHECK(c.layers.at(1) == fam(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(c.layers.at(2) == fam(4, {{2, 3}}));

  CHECK_THROWS_AS(partition_by_generator(fam(4, {{2, 4}}), fam(4, {{1}})), PreconditionError);
}

TEST_CASE("intersection_layer") {
  const Family star = fam(4, {{1, 2}, {1, 3}, {1, 4}});
  const LayeredFamily a = partition_by_generator(star, fam(4, {{1}}));
  CHECK(intersection_layer(a, 1) == fam(4, {{1}}));
  CHECK(intersection_layer(a, 2).empty());
  CHECK_THROWS_AS(intersection_layer(a, 3), ParameterError);

  const Family tri = build_triangle(3, 1);
  CHECK(intersection_layer(partition_by_generator(tri, tri), 2) == distinct_intersections(tri));
}

TEST_CASE("property: the intersection layers cover I(F) exactly") {
  for (const auto& [n, k, t] : {std::tuple{6, 3, 1}, std::tuple{6, 3, 2}, std::tuple{6, 2, 1}}) {
    for (const Family& f : enumerate_maximal_families(n, k, t)) {
      const Family gens = minimal_sets(transversal_family(f, t, k));
      const LayeredFamily layered = partition_by_generator(f, gens);
      Family merged(n);
      std::size_t total = 0;
      for (int l = layered.s; l <= layered.k; ++l) {
        const Family layer = intersection_layer(layered, l);
        total += layer.size();
        for (const Subset& s : layer) merged.insert(s);
      }
      const Family all = distinct_intersections(f);
      CHECK(merged == all);
      CHECK(all.size() <= total);
      // every member lands in the layer of its largest generator
      for (const auto& [l, layer] : layered.layers) {
        for (const Subset& m : layer) {
          int best = 0;
          for (const Subset& g : gens)
            if (g.is_subset_of(m)) best = std::max(best, g.size());
          CHECK(best == l);
        }
      }
    }
  }
}

TEST_CASE("eval_Il_bound") {
  CHECK(eval_Il_bound(6, 2, 1, 2, 2) == ExactNat(12));
  CHECK(eval_Il_bound(10, 4, 1, 3, 2) == ExactNat(1848));
  // l = k leaves a single empty-extension term
  CHECK(eval_Il_bound(50, 5, 2, 5, 3) ==
        ExactNat(3 * 5 * 4 * 4 * (10 + 10 + 5 + 1)));
  CHECK_THROWS_AS(eval_Il_bound(6, 2, 1, 1, 2), ParameterError);
  CHECK_THROWS_AS(eval_Il_bound(6, 2, 1, 2, 0), ParameterError);
}

TEST_CASE("eval_total_bound against a term-by-term reference") {
  CHECK(eval_total_bound(6, 3, 1) == 195);
  CHECK(eval_total_bound(6, 3, 1) == total_bound_reference(6, 3, 1));
  for (int t = 1; t <= 3; ++t)
    for (int k = t + 2; k <= t + 5; ++k)
      for (int n = k; n <= 30; n += 3) CHECK(eval_total_bound(n, k, t) == total_bound_reference(n, k, t));
  // the first three terms are the sunflower count
  CHECK(eval_total_bound(9, 4, 1) - eval_upper_layers_bound(9, 4, 1, 3) == count_I_sunflower(9, 4, 1).value());
  // at k = t+2 the layer sum has the single term l = t+2
  CHECK(eval_upper_layers_bound(12, 4, 2, 4) == 16 * 3 * (6 + 4 + 1));
  CHECK_THROWS_AS(eval_total_bound(6, 2, 1), ParameterError);
}
