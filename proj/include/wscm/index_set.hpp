#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace wscm {

/// Largest vertex (and variable) count representable by an IndexSet.
inline constexpr std::size_t kMaxIndices = 64;

/**
 * A subset of {0, ..., 63} stored as a bit mask.
 *
 * Used both for vertex sets of a graph and for supports of square-free
 * monomials; a vertex of a graph and the variable attached to it share one
 * index. Ordering is lexicographic on the sorted member lists, so
 * {0,1,3} < {0,2} and {0,1} < {0,1,2}.
 */
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> members) {
    for (auto m : members) insert(m);
  }

  static IndexSet from_vector(const std::vector<std::size_t>& members) {
    IndexSet s;
    for (auto m : members) s.insert(m);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr IndexSet range(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U); }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  /// Largest member; undefined on the empty set.
  constexpr std::size_t back() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  IndexSet& operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

  friend constexpr std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    const auto diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const auto low = std::countr_zero(diff);
    // Members below `low` agree. The side holding `low` sees it next; the other
    // side either continues with something larger or has run out.
    const bool a_has = (a.bits_ >> low) & 1U;
    const auto other = a_has ? b.bits_ : a.bits_;
    const bool other_continues = low < 63 && (other >> (low + 1)) != 0;
    const bool a_less = a_has ? other_continues : !other_continues;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Degree first, then lexicographic. The canonical order for generator lists.
struct DegreeLexLess {
  bool operator()(IndexSet a, IndexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Calls f on every subset of `ground` with exactly k members, in no particular order.
template <class F>
void for_each_subset_of_size(IndexSet ground, std::size_t k, F&& f) {
  const auto members = ground.members();
  const std::size_t n = members.size();
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IndexSet s;
    for (auto p : pick) s.insert(members[p]);
    f(s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Calls f on every subset of `ground`, including the empty set and `ground`.
template <class F>
void for_each_subset(IndexSet ground, F&& f) {
  const auto g = ground.bits();
  std::uint64_t s = 0;
  while (true) {
    f(IndexSet(s));
    if (s == g) return;
    s = (s - g) & g;
  }
}

}  // namespace wscm

template <>
struct std::hash<wscm::IndexSet> {
  std::size_t operator()(wscm::IndexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
