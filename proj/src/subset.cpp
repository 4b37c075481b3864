#include "isetlab/subset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "isetlab/error.hpp"

namespace isetlab {

namespace {

int word_count(int universe_size) { return (universe_size + Subset::kWordBits - 1) / Subset::kWordBits; }

}  // namespace

Subset::Subset(int universe_size) : universe_(universe_size) {
  if (universe_size < 0) throw ParameterError("universe size must be non-negative");
  words_.assign(static_cast<std::size_t>(word_count(universe_size)), Word{0});
}

Subset Subset::of(int universe_size, std::span<const int> elements) {
  Subset s(universe_size);
  for (int e : elements) s.insert(e);
  return s;
}

Subset Subset::prefix(int universe_size, int m) {
  if (m < 0 || m > universe_size) throw ParameterError("prefix length out of range");
  Subset s(universe_size);
  for (int e = 1; e <= m; ++e) s.insert(e);
  return s;
}

void Subset::check_element(int element) const {
  if (element < 1 || element > universe_) {
    throw ParameterError("element " + std::to_string(element) + " outside universe [" + std::to_string(universe_) + "]");
  }
}

void Subset::check_same_universe(const Subset& other) const {
  if (universe_ != other.universe_) {
    throw ParameterError("subset universe mismatch: " + std::to_string(universe_) + " vs " +
                         std::to_string(other.universe_));
  }
}

bool Subset::contains(int element) const {
  check_element(element);
  const int bit = element - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & Word{1};
}

void Subset::insert(int element) {
  check_element(element);
  const int bit = element - 1;
  words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
}

void Subset::erase(int element) {
  check_element(element);
  const int bit = element - 1;
  words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
}

int Subset::size() const noexcept {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool Subset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w) + 1);
      w &= w - 1;
    }
  }
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Subset::is_proper_subset_of(const Subset& other) const { return is_subset_of(other) && *this != other; }

int Subset::intersection_size(const Subset& other) const {
  check_same_universe(other);
  int total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & other.words_[i]);
  return total;
}

Subset Subset::operator&(const Subset& other) const {
  check_same_universe(other);
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

Subset Subset::operator|(const Subset& other) const {
  check_same_universe(other);
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

Subset Subset::operator-(const Subset& other) const {
  check_same_universe(other);
  Subset out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

bool Subset::operator==(const Subset& other) const {
  check_same_universe(other);
  return std::equal(words_.begin(), words_.end(), other.words_.begin());
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  check_same_universe(other);
  if (auto c = size() <=> other.size(); c != 0) return c;
  // Lexicographic on ascending element lists: the set owning the smallest
  // element of the symmetric difference comes first.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word diff = words_[i] ^ other.words_[i];
    if (diff == 0) continue;
    const Word lowest = diff & (~diff + 1);
    return (words_[i] & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = std::hash<int>{}(universe_);
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

void for_each_subset_of(const Subset& ground, int r, const std::function<bool(const Subset&)>& visit) {
  const std::vector<int> pool = ground.elements();
  const int m = static_cast<int>(pool.size());
  if (r < 0 || r > m) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  Subset current(ground.universe_size());
  while (true) {
    current = Subset(ground.universe_size());
    for (int i : idx) current.insert(pool[i]);
    if (!visit(current)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_combination(int n, int r, const std::function<bool(const Subset&)>& visit) {
  for_each_subset_of(Subset::prefix(n, n), r, visit);
}

}  // namespace isetlab
