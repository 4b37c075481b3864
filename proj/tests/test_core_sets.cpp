#include <doctest.h>

#include <random>

#include "isetlab/core.hpp"
#include "isetlab/constructions.hpp"
#include "isetlab/error.hpp"
#include "oracles.hpp"

using namespace isetlab;

namespace {

Family fam(int n, std::vector<std::vector<int>> lists) { return Family::from_lists(n, lists); }

}  // namespace

TEST_CASE("subset basics") {
  Subset s = Subset::of(5, {1, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.elements() == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(s.insert(6), ParameterError);
  CHECK_THROWS_AS(s.contains(0), ParameterError);
  CHECK_THROWS_AS((void)(s == Subset(6)), ParameterError);
}

TEST_CASE("subsets beyond 128 elements spill to the general path") {
  Subset a = Subset::of(300, {1, 129, 300});
  Subset b = Subset::of(300, {129, 200, 300});
  CHECK((a & b).elements() == std::vector<int>{129, 300});
  CHECK((a | b).size() == 4);
  CHECK((a - b).elements() == std::vector<int>{1});
  CHECK(a < b);  // smallest element of the symmetric difference is 1, owned by a
}

TEST_CASE("canonical order: cardinality first, then lexicographic") {
  const Family f = fam(4, {{2, 3}, {1}, {1, 3}, {1, 2}, {4}, {1, 2, 3}});
  CHECK(f.to_lists() == std::vector<std::vector<int>>{{1}, {4}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
}

TEST_CASE("family dedup and universe checks") {
  Family f = fam(4, {{1, 2}, {1, 2}, {3}});
  CHECK(f.size() == 2);
  CHECK_FALSE(f.insert(Subset::of(4, {3})));
  CHECK(f.insert(Subset::of(4, {4})));
  CHECK_THROWS_AS(f.insert(Subset::of(5, {1})), ParameterError);
  CHECK_THROWS_AS(Params::make(3, 4, 1), ParameterError);
  CHECK_THROWS_AS(Params::make(5, 2, 0), ParameterError);
}

TEST_CASE("intersect") {
  CHECK(intersect(Subset::of(4, {1, 2, 3}), Subset::of(4, {2, 3, 4})) == Subset::of(4, {2, 3}));
  const Subset a = Subset::of(6, {2, 5, 6});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subset::of(4, {1, 2}), Subset::of(4, {3, 4})).empty());
  CHECK_THROWS_AS(intersect(Subset::of(4, {1}), Subset::of(5, {1})), ParameterError);
}

TEST_CASE("is_t_intersecting") {
  CHECK(is_t_intersecting(fam(4, {{1, 2, 3}, {1, 2, 4}}), 2));
  CHECK_FALSE(is_t_intersecting(fam(4, {{1, 2, 3}, {1, 2, 4}}), 3));
  CHECK(is_t_intersecting(fam(3, {{1, 2}, {2, 3}, {1, 3}}), 1));
  CHECK(is_t_intersecting(fam(3, {{1}}), 5));
  CHECK(is_t_intersecting(Family(3), 1));
}

TEST_CASE("distinct_intersections") {
  CHECK(distinct_intersections(fam(3, {{1, 2}, {2, 3}, {1, 3}})) == fam(3, {{1}, {2}, {3}}));
  CHECK(distinct_intersections(fam(3, {{1, 2, 3}})).empty());
  const Family s1 = build_sunflower(6, 3, Subset::of(6, {1}));
  const Family i = distinct_intersections(s1);
  CHECK(i.size() == 6);
  CHECK(i == fam(6, {{1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
  // the empty set is kept
  CHECK(distinct_intersections(fam(4, {{1, 2}, {3, 4}})) == Family(4, {Subset(4)}));
}

TEST_CASE("is_antichain") {
  CHECK(is_antichain(fam(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_antichain(fam(2, {{1}, {1, 2}})));
  CHECK(is_antichain(build_full_level(6, 3)));
}

TEST_CASE("up_closure") {
  CHECK(up_closure(fam(4, {{1}}), 2) == fam(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(up_closure(fam(4, {{1, 2}}), 2) == fam(4, {{1, 2}}));
  const Family tri = fam(5, {{1, 2}, {2, 3}, {1, 3}});
  const Family up = up_closure(tri, 3);
  CHECK(up.size() == 7);
  // brute force over C(5,3)
  std::size_t expected = 0;
  for (const auto& d : oracle::combinations(5, 3)) {
    expected += oracle::subset({1, 2}, d) || oracle::subset({2, 3}, d) || oracle::subset({1, 3}, d);
  }
  CHECK(up.size() == expected);
  CHECK_THROWS_AS(up_closure(fam(4, {{1}}), 5), ParameterError);
  CHECK_THROWS_AS(up_closure(fam(4, {{1, 2, 3}}), 2), PreconditionError);
}

TEST_CASE("find_common_core_sunflower") {
  auto hit = find_common_core_sunflower(fam(4, {{1, 2}, {1, 3}, {1, 4}}), 1, 3);
  REQUIRE(hit.has_value());
  CHECK(hit->core == Subset::of(4, {1}));
  CHECK(hit->petals.size() == 3);
  CHECK_FALSE(find_common_core_sunflower(fam(3, {{1, 2}, {2, 3}, {1, 3}}), 1, 3).has_value());
  CHECK_FALSE(find_common_core_sunflower(fam(5, {{1, 2, 3}, {1, 4, 5}}), 2, 2).has_value());
  // lexicographically first core and first petals
  auto two = find_common_core_sunflower(fam(5, {{2, 3}, {2, 4}, {1, 5}, {1, 4}}), 1, 2);
  REQUIRE(two.has_value());
  CHECK(two->core == Subset::of(5, {1}));
  CHECK(two->petals == fam(5, {{1, 4}, {1, 5}}));
}

TEST_CASE("property: I is monotone under extension and bounded by C(|F|,2)") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Family f(n);
    const int members = static_cast<int>(rng() % 8);
    for (int i = 0; i < members; ++i) {
      Subset s(n);
      for (int e = 1; e <= n; ++e)
        if (rng() % 2) s.insert(e);
      f.insert(s);
    }
    Subset h(n);
    for (int e = 1; e <= n; ++e)
      if (rng() % 2) h.insert(e);
    const Family before = distinct_intersections(f);
    Family g = f;
    g.insert(h);
    CHECK(before.is_subfamily_of(distinct_intersections(g)));
    CHECK(before.size() <= f.size() * (f.size() - (f.empty() ? 0 : 1)) / 2);
    for (int t = 2; t <= 3; ++t) {
      if (is_t_intersecting(f, t)) CHECK(is_t_intersecting(f, t - 1));
    }
  }
}

TEST_CASE("property: I of a k-uniform family only has sets smaller than k") {
  for (const Family& f : {build_full_level(6, 3), build_A_t(7, 3, 1)}) {
    for (const Subset& s : distinct_intersections(f)) CHECK(s.size() < 3);
  }
}
