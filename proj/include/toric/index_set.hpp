#ifndef TORIC_INDEX_SET_HPP
#define TORIC_INDEX_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace toric {

/// A subset of {0, ..., 63}, stored as a bitmask.
///
/// Ordering is by cardinality first, then lexicographic on the sorted index lists, so
/// ordered containers print faces in the conventional order.
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices);
  static IndexSet from_indices(const std::vector<int>& indices);
  /// {0, ..., count-1}
  static IndexSet full(int count);
  static constexpr IndexSet singleton(int i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return ((bits_ >> i) & 1U) != 0; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest element plus one; 0 for the empty set.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

  std::vector<int> to_vector() const;

  /// Calls f on every subset, including the empty set and the set itself.
  template <typename F>
  void for_each_subset(F&& f) const {
    std::uint64_t sub = bits_;
    for (;;) {
      f(IndexSet(sub));
      if (sub == 0) break;
      sub = (sub - 1) & bits_;
    }
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr bool operator<(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    return (a.bits_ & diff & (~diff + 1)) != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace toric

template <>
struct std::hash<toric::IndexSet> {
  std::size_t operator()(toric::IndexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif  // TORIC_INDEX_SET_HPP
