#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ultrauniform {

/// Largest carrier supported by the dense bit representations.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of a carrier {0, ..., n-1}, one bit per point.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet singleton(std::size_t i) { return PointSet(std::uint64_t{1} << i); }
  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Order on sorted element lists: {0,1} < {0,2} < {1}. On disjoint sets this
/// orders by minimum element.
inline bool lex_less(PointSet a, PointSet b) {
  while (!a.empty() && !b.empty()) {
    const auto ma = a.min();
    const auto mb = b.min();
    if (ma != mb) return ma < mb;
    a.erase(ma);
    b.erase(mb);
  }
  return a.empty() && !b.empty();
}

}  // namespace ultrauniform
