// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isetlab/constructions.hpp"
#include "isetlab/core.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/harness.hpp"
#include "isetlab/threshold.hpp"
#include "oracles.hpp"

using namespace isetlab;

namespace {

std::map<std::pair<int, int>, std::int64_t> fmin_cache;

std::int64_t cached_f_min(int k, int t) {
  const auto key = std::pair{k, t};
  auto it = fmin_cache.find(key);
  if (it == fmin_cache.end()) it = fmin_cache.emplace(key, f_min(k, t)).first;
  return it->second;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

template <typename Grid>
void for_each_count_grid_point(Grid&& body) {
  for (int t = 1; t <= 3; ++t)
    for (int k = t + 1; k <= t + 4; ++k)
      for (int n = 2 * k - t; n <= 14; ++n)
        if (n >= k) body(n, k, t);
}

std::vector<std::vector<int>> sunflower_lists(int n, int k, int t) {
  oracle::Set core;
  for (int e = 1; e <= t; ++e) core.push_back(e);
  return oracle::star(n, k, core);
}

void criterion1(Outcome& o) {
  int points = 0;
  for_each_count_grid_point([&](int n, int k, int t) {
    ++points;
    const std::size_t brute = oracle::distinct_intersections(oracle::a_t(n, k, t)).size();
    if (count_I_At(n, k, t).to_u64() != brute)
      o.fail("mismatch at (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
  });
  const std::tuple<int, int, int, std::size_t> spots[] = {{5, 2, 1, 3}, {6, 3, 1, 15}, {20, 4, 1, 517}};
  for (const auto& [n, k, t, want] : spots) {
    const std::size_t brute = oracle::distinct_intersections(oracle::a_t(n, k, t)).size();
    if (count_I_At(n, k, t).to_u64() != want || brute != want)
      o.fail("spot value (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
  }
  o.detail << points << " grid points, 3 spot values";
}

void criterion2(Outcome& o) {
  int points = 0;
  for_each_count_grid_point([&](int n, int k, int t) {
    ++points;
    const std::size_t brute = oracle::distinct_intersections(sunflower_lists(n, k, t)).size();
    if (count_I_sunflower(n, k, t).to_u64() != brute)
      o.fail("mismatch at (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
  });
  std::size_t chains = 0;
  for (int t = 1; t <= 10; ++t)
    for (int k = t; k <= 40; ++k)
      for (int n = std::max(k, t + 2); n <= 400; ++n) {
        ++chains;
        if (!sunflower_chain_check(n, k, t))
          o.fail("chain check at (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
      }
  o.detail << points << " grid points, " << chains << " chain checks";
}

void criterion3(Outcome& o) {
  int points = 0;
  for_each_count_grid_point([&](int n, int k, int t) {
    ++points;
    if (!(count_I_sunflower(n, k, t) < count_I_At(n, k, t)))
      o.fail("not strict at (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
  });
  o.detail << points << " grid points";
}

void criterion4(Outcome& o) {
  if (cached_f_min(4, 1) != 272) o.fail("f_min(4,1) != 272");
  for (std::int64_t n : {271, 272}) {
    const ThresholdVerdict v = eval_threshold_sides(n, 4, 1);
    const BigInt lhs = 252 * BigInt(n) + 4092;
    const BigInt rhs = BigInt(n) * n - 4 * BigInt(n) + 6;
    if (v.lhs.value() != lhs || v.rhs.value() != rhs) o.fail("hand expansion mismatch at n=" + std::to_string(n));
    if (v.holds != (n == 272)) o.fail("wrong verdict at n=" + std::to_string(n));
  }
  const oracle::Pascal c(1700, 17);
  int points = 0;
  for (int t : {1, 2, 3, 5})
    for (int k = t + 2; k <= t + 12; ++k)
      for (std::int64_t n : {std::int64_t{k}, std::int64_t{2} * k, std::int64_t{10} * k, std::int64_t{100} * k}) {
        if (n < t + 2) continue;
        ++points;
        const auto [lhs, rhs] = oracle::threshold_sides(c, n, k, t);
        const ThresholdVerdict v = eval_threshold_sides(n, k, t);
        ThresholdScanner scan(k, t, n);
        const ThresholdVerdict s = scan.verdict();
        if (v.lhs.value() != lhs || v.rhs.value() != rhs || s.lhs.value() != lhs || s.rhs.value() != rhs)
          o.fail("evaluators disagree at (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
      }
  o.detail << "f_min(4,1)=272, verdicts 271/272, " << points << " dual-evaluator points";
}

void criterion5(Outcome& o) {
  double worst = 0;
  int worst_k = 0;
  for (int k = 4; k <= 64; ++k) {
    const std::int64_t f = cached_f_min(k, 1);
    if (!(f < 50LL * k * k)) o.fail("f_min(" + std::to_string(k) + ",1)=" + std::to_string(f) + " >= 50k^2");
    const double ratio = static_cast<double>(f) / (static_cast<double>(k) * k);
    if (ratio > worst) {
      worst = ratio;
      worst_k = k;
    }
  }
  o.detail << "max f_min/k^2 = " << worst << " at k=" << worst_k;
}

bool check_band(Outcome& o, const std::vector<std::pair<int, int>>& kt, double lo, double hi) {
  bool ok = true;
  for (std::size_t i = 0; i < kt.size(); ++i) {
    const auto [k, t] = kt[i];
    const std::int64_t f = cached_f_min(k, t);
    if (!eval_threshold_sides(f, k, t).holds || eval_threshold_sides(f - 1, k, t).holds)
      o.fail("scanner and direct evaluator disagree at k=" + std::to_string(k));
    o.detail << " f(" << k << "," << t << ")=" << f;
    if (i == 0) continue;
    const auto [pk, pt] = kt[i - 1];
    const double e = std::log(static_cast<double>(f) / static_cast<double>(cached_f_min(pk, pt))) /
                     std::log(static_cast<double>(k) / pk);
    const bool in = e >= lo && e <= hi;
    char buf[96];
    std::snprintf(buf, sizeof buf, " [%d->%d: %.4f%s]", pk, k, e, in ? "" : " OUT OF BAND");
    o.detail << buf;
    if (!in) {
      ok = false;
      o.pass = false;
    }
  }
  return ok;
}

void criterion6(Outcome& o) {
  o.detail << "t=1:";
  check_band(o, {{16, 1}, {32, 1}, {64, 1}, {128, 1}}, 1.3, 2.1);
  o.detail << "; t=ceil(k/4):";
  check_band(o, {{16, 4}, {24, 6}, {32, 8}}, 2.3, 3.7);
}

void criterion7(Outcome& o) {
  const std::tuple<int, int, int> instances[] = {{4, 2, 1}, {5, 2, 1}, {6, 2, 1}, {6, 3, 1},
                                                 {7, 3, 1}, {6, 3, 2}, {7, 3, 2}};
  std::size_t audited = 0;
  std::size_t with_hypotheses = 0;
  std::map<std::string, std::size_t> failed;  // "(n,k,t) check" -> families
  std::map<std::string, std::string> first;   // same key -> first failing family
  for (const auto& [n, k, t] : instances) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ") ";
    std::size_t id = 0;
    for_each_maximal_family(n, k, t, [&](const Family& f) {
      const AuditRecord a = audit_proof_inequalities(f, t, id++);
      ++audited;
      with_hypotheses += a.hypotheses_met;
      const std::pair<const char*, bool> checks[] = {
          {"lemma21_antichain", a.lemma21_antichain},   {"lemma21_upclosure", a.lemma21_upclosure},
          {"lemma21_nosunflower", a.lemma21_nosunflower}, {"eq1", a.eq1_ok.value_or(true)},
          {"eq4", a.eq4_ok.value_or(true)},               {"eq5", a.eq5_ok.value_or(true)},
          {"eq7", a.eq7_ok.value_or(true)},               {"layer_cover", a.layer_cover_ok}};
      for (const auto& [name, ok] : checks) {
        if (ok) continue;
        const std::string key = tag + name;
        if (failed[key]++ == 0) first[key] = f.to_string();
      }
    });
  }
  o.detail << audited << " families audited, " << with_hypotheses << " with hypotheses met";
  for (const auto& [key, count] : failed) {
    o.pass = false;
    o.detail << "; " << key << " false on " << count << " families, first " << first[key];
  }
}

void criterion8(Outcome& o) {
  for (const auto& [n, k, t] : {std::tuple{5, 2, 1}, std::tuple{4, 2, 1}}) {
    const ExtremalReport r = extremal_report(n, k, t);
    if (r.max_I != 3 || !r.count_I_At || r.count_I_At->to_u64() != 3 || !r.at_is_max.value_or(false))
      o.fail("report (" + std::to_string(n) + ",2,1) ");
  }
  const auto fams = enumerate_maximal_families(5, 2, 1);
  std::size_t triangles = 0;
  std::size_t stars = 0;
  for (const Family& f : fams) {
    const FamilyKind kind = classify_level_family(f, 1);
    triangles += std::holds_alternative<TriangleKind>(kind);
    stars += std::holds_alternative<SunflowerKind>(kind);
  }
  if (fams.size() != 15 || triangles != 10 || stars != 5) o.fail("(5,2,1) family census ");
  if (oracle::maximal_families(5, 2, 1).size() != 15) o.fail("oracle census ");
  o.detail << fams.size() << " families: " << triangles << " triangles, " << stars << " stars";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const auto level = build_full_level(n, k);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(level.size(), 20))(rng);
    Family f(n);
    for (std::size_t i = 0; i < m; ++i)
      f.insert(level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)]);
    const Subset h = level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)];
    Family g = f;
    g.insert(h);
    if (!distinct_intersections(f).is_subfamily_of(distinct_intersections(g)))
      o.fail("trial " + std::to_string(trial) + ": " + f.to_string() + " + " + h.to_string());
  }
  o.detail << "1000 random pairs";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"formula-oracle equivalence for |I(A_t)|", criterion1},
      {"sunflower count and chain identity", criterion2},
      {"strict domination |I(S_X)| < |I(A_t)|", criterion3},
      {"threshold exactness", criterion4},
      {"f_min(k,1) < 50k^2 for k in [4,64]", criterion5},
      {"regime growth bands", criterion6},
      {"lemma audits on enumerated families", criterion7},
      {"desk-scale extremality", criterion8},
      {"monotonicity of I under extension", criterion9},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s [%d] %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures;
}
