#include "isetlab/family.hpp"

#include <algorithm>
#include <sstream>

#include "isetlab/error.hpp"

namespace isetlab {

Family::Family(int universe_size) : universe_(universe_size) {
  if (universe_size < 0) throw ParameterError("universe size must be non-negative");
}

Family::Family(int universe_size, std::vector<Subset> sets) : Family(universe_size) {
  for (const Subset& s : sets) check_member(s);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
}

Family Family::from_lists(int universe_size, const std::vector<std::vector<int>>& lists) {
  std::vector<Subset> sets;
  sets.reserve(lists.size());
  for (const auto& l : lists) sets.push_back(Subset::of(universe_size, l));
  return Family(universe_size, std::move(sets));
}

void Family::check_member(const Subset& s) const {
  if (s.universe_size() != universe_) {
    throw ParameterError("family member universe " + std::to_string(s.universe_size()) +
                         " does not match family universe " + std::to_string(universe_));
  }
}

bool Family::insert(const Subset& s) {
  check_member(s);
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it != sets_.end() && *it == s) return false;
  sets_.insert(it, s);
  return true;
}

bool Family::contains(const Subset& s) const {
  check_member(s);
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool Family::is_subfamily_of(const Family& other) const {
  if (universe_ != other.universe_) throw ParameterError("family universe mismatch");
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end());
}

std::vector<std::vector<int>> Family::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (const Subset& s : sets_) out.push_back(s.elements());
  return out;
}

std::string Family::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i != 0) os << ", ";
    os << sets_[i].to_string();
  }
  os << '}';
  return os.str();
}

bool Family::operator==(const Family& other) const {
  return universe_ == other.universe_ && sets_ == other.sets_;
}

std::strong_ordering Family::operator<=>(const Family& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  if (auto c = sets_.size() <=> other.sets_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end());
}

Params Params::make(int n, int k, int t) {
  if (t < 1 || t > k || k > n) {
    throw ParameterError("expected 1 <= t <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " t=" + std::to_string(t));
  }
  return Params{n, k, t};
}

}  // namespace isetlab
