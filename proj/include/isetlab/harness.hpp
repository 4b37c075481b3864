#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isetlab/constructions.hpp"
#include "isetlab/exact.hpp"
#include "isetlab/family.hpp"

namespace isetlab {

inline constexpr std::uint64_t kDefaultVertexBudget = 5000;

/// Streams every maximal t-intersecting subfamily of C([n], k), i.e. every
/// maximal clique of the graph on k-sets joined when they share >= t
/// elements. Bron–Kerbosch with Tomita pivoting over vertex bitsets; the
/// visiting order is deterministic. Throws BudgetError when C(n, k) exceeds
/// `vertex_budget` and ParameterError for invalid (n, k, t).
void for_each_maximal_family(int n, int k, int t, const std::function<void(const Family&)>& visit,
                             std::uint64_t vertex_budget = kDefaultVertexBudget);

/// All maximal families, sorted canonically.
std::vector<Family> enumerate_maximal_families(int n, int k, int t,
                                               std::uint64_t vertex_budget = kDefaultVertexBudget);

/// Which lemma and proof inequalities were checked on one saturated family,
/// and how they came out. Optional verdicts are absent when their hypotheses
/// fail or nothing was applicable.
struct AuditRecord {
  std::size_t family_id = 0;
  int n = 0;
  int k = 0;
  int t = 0;
  std::size_t family_size = 0;
  std::size_t intersections = 0;  // |I(F)|

  bool lemma21_antichain = false;    // B is a t-intersecting antichain
  bool lemma21_upclosure = false;    // F is the k-level up-closure of B
  bool lemma21_nosunflower = false;  // no t-core shared by k+1 generators

  int s = 0;
  std::optional<int> tau;
  std::optional<int> alpha;
  bool complete_sunflower = false;  // B has a t-set, so F = S_X
  bool hypotheses_met = false;      // s >= t+1 and alpha defined

  std::optional<bool> eq1_ok;  // |B^(l)| <= s l (k-t+1)^(l-t-1) for l >= alpha
  std::optional<bool> eq4_ok;  // |I_l| <= layer bound for populated l >= t+2
  std::optional<bool> eq5_ok;  // |union of I_i, i < alpha| <= sunflower count
  std::optional<bool> eq6_alpha_ok;    // sum over l >= alpha of |I_l| below the sum from alpha
  std::optional<bool> eq6_relaxed_ok;  // same, against the sum from t+2
  std::optional<bool> eq7_ok;          // |I(F)| < total bound
  bool layer_cover_ok = false;         // union of I_l equals I(F), |I(F)| <= sum |I_l|

  std::optional<FamilyKind> classification;

  /// Every theorem-backed verdict that was evaluated came out true.
  bool all_ok() const;
};

/// Audits a saturated t-intersecting k-uniform family (k read off the members).
/// Throws PreconditionError if the family is empty, non-uniform, not
/// t-intersecting or not saturated.
AuditRecord audit_proof_inequalities(const Family& fam, int t, std::size_t family_id = 0);

struct ExtremalReport {
  int n = 0;
  int k = 0;
  int t = 0;
  std::size_t num_maximal = 0;
  std::size_t max_I = 0;
  std::size_t num_argmax = 0;
  std::vector<Family> argmax_families;  // first `argmax_cap` in canonical order
  std::optional<ExactNat> count_I_At;   // present when the closed form applies (k >= t+1, n >= 2k-t)
  std::optional<bool> at_is_max;
  std::map<std::string, std::size_t> kinds;  // classification counts when k == t+1
  std::vector<AuditRecord> audits;           // filled when requested
};

struct ReportOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  std::size_t argmax_cap = 16;
  bool audit = false;
};

ExtremalReport extremal_report(int n, int k, int t, const ReportOptions& options = {});

}  // namespace isetlab
