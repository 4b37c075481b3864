#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "isetlab/subset.hpp"

namespace isetlab {

/// A duplicate-free collection of subsets of [n], always kept in canonical
/// order (cardinality, then lexicographic). Two equal families are therefore
/// element-wise identical.
class Family {
 public:
  using const_iterator = std::vector<Subset>::const_iterator;

  Family() = default;
  explicit Family(int universe_size);
  /// Sorts and deduplicates `sets`; every member must live in the given universe.
  Family(int universe_size, std::vector<Subset> sets);

  static Family from_lists(int universe_size, const std::vector<std::vector<int>>& lists);

  /// Returns false if the set was already present.
  bool insert(const Subset& s);
  bool contains(const Subset& s) const;

  int universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  const_iterator begin() const noexcept { return sets_.begin(); }
  const_iterator end() const noexcept { return sets_.end(); }
  const std::vector<Subset>& sets() const noexcept { return sets_; }

  /// True iff every member is a member of `other`.
  bool is_subfamily_of(const Family& other) const;

  std::vector<std::vector<int>> to_lists() const;
  std::string to_string() const;

  bool operator==(const Family& other) const;
  /// Orders families by size, then member-wise canonically.
  std::strong_ordering operator<=>(const Family& other) const;

 private:
  void check_member(const Subset& s) const;

  int universe_ = 0;
  std::vector<Subset> sets_;
};

/// The triple (n, k, t) with 1 <= t <= k <= n.
struct Params {
  int n = 0;
  int k = 0;
  int t = 0;

  /// Throws ParameterError unless 1 <= t <= k <= n.
  static Params make(int n, int k, int t);
  bool operator==(const Params&) const = default;
};

}  // namespace isetlab
