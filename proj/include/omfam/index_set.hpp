#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace omfam {

/// Largest ground set we handle; subsets are packed into one machine word.
inline constexpr std::size_t kMaxGroundSize = 64;

/// Subset of a ground set {0, ..., m-1}, stored as a bitmask. Indices are
/// 0-based here; all text and JSON I/O is 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  static IndexSet from_indices(const std::vector<std::size_t>& indices) {
    IndexSet s;
    for (auto i : indices) s.insert(i);
    return s;
  }

  static constexpr IndexSet full(std::size_t m) {
    return IndexSet(m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }

  void insert(std::size_t i) {
    if (i >= kMaxGroundSize) throw std::out_of_range("index beyond 64-element ground set");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order used for all printed families: by cardinality, then
/// lexicographically on the sorted index lists.
bool canonical_less(IndexSet a, IndexSet b);

}  // namespace omfam
