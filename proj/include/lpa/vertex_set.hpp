#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace lpa {

using VertexId = std::uint32_t;

/// Maximum number of vertices a graph (including primed quotient vertices) may carry.
inline constexpr std::size_t kMaxVertices = 64;

/// Set of vertex ids backed by a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet all(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  /// Complement relative to the first n vertices.
  constexpr VertexSet complement(std::size_t n) const { return all(n) - *this; }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on the sorted member lists.
  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      const int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      x &= x - 1;
      y &= y - 1;
    }
    if (x == 0 && y == 0) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace lpa
