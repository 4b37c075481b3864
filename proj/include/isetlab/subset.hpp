#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace isetlab {

/// A subset of [n] = {1, ..., n} stored as a bit-vector; element i lives in bit i-1.
///
/// Universes up to 128 elements stay in inline storage (two words), larger
/// universes spill to the heap. All binary operations require equal universes
/// and throw ParameterError otherwise.
///
/// Ordering is the canonical one used everywhere in the library: by
/// cardinality, then lexicographically on the ascending element lists
/// ({1,2} < {1,3} < {2,3}).
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Subset() = default;
  explicit Subset(int universe_size);

  /// Builds a subset from 1-based elements. Duplicates are ignored.
  static Subset of(int universe_size, std::span<const int> elements);
  static Subset of(int universe_size, std::initializer_list<int> elements) {
    return of(universe_size, std::span<const int>(elements.begin(), elements.size()));
  }
  /// {1, ..., m}
  static Subset prefix(int universe_size, int m);

  int universe_size() const noexcept { return universe_; }
  bool contains(int element) const;
  void insert(int element);
  void erase(int element);

  int size() const noexcept;
  bool empty() const noexcept;
  std::vector<int> elements() const;

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const;
  int intersection_size(const Subset& other) const;

  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  /// Set difference.
  Subset operator-(const Subset& other) const;

  bool operator==(const Subset& other) const;
  std::strong_ordering operator<=>(const Subset& other) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

 private:
  void check_element(int element) const;
  void check_same_universe(const Subset& other) const;

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

/// Visits every r-subset of `ground` in canonical (lexicographic) order.
/// Returning false from the callback stops the scan.
void for_each_subset_of(const Subset& ground, int r, const std::function<bool(const Subset&)>& visit);

/// Visits every r-subset of [n] in canonical order.
void for_each_combination(int n, int r, const std::function<bool(const Subset&)>& visit);

}  // namespace isetlab

template <>
struct std::hash<isetlab::Subset> {
  std::size_t operator()(const isetlab::Subset& s) const noexcept { return s.hash(); }
};
