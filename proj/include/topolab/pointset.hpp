#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace topolab {

using Mask = std::uint64_t;

// Hard representation limit: a PointSet is one machine word.
inline constexpr std::size_t kMaxPoints = 62;

// A subset of the points {0..n-1} of some ambient space. The ambient size is
// not stored; operations that need it (complement) take it explicitly.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask bits) : bits_(bits) {}
  PointSet(std::initializer_list<std::size_t> points) {
    for (auto p : points) bits_ |= Mask{1} << p;
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n == 0 ? Mask{0} : (~Mask{0} >> (64 - n)));
  }
  static constexpr PointSet singleton(std::size_t i) { return PointSet(Mask{1} << i); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  // Smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr PointSet complement_in(std::size_t n) const { return PointSet(full(n).bits_ & ~bits_); }
  constexpr PointSet with(std::size_t i) const { return PointSet(bits_ | (Mask{1} << i)); }
  constexpr PointSet without(std::size_t i) const { return PointSet(bits_ & ~(Mask{1} << i)); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet operator^(PointSet o) const { return PointSet(bits_ ^ o.bits_); }
  PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto copy = *this; ++*this; return copy; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> elements() const { return {begin(), end()}; }
  // "{0,2,5}"
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

// Every subset of `ground`, ascending by bit value.
std::vector<PointSet> subsets_of(PointSet ground);

// Configurable point cap for constructions (default 20). The TOPOLAB_CAP
// environment variable overrides it; values are clamped to [1, kMaxPoints].
std::size_t point_cap();

}  // namespace topolab
