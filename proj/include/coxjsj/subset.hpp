#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace coxjsj {

/// Upper bound on the number of generators of a system.
inline constexpr std::size_t kMaxRank = 64;

/// A set of generators of an ambient system, held as a bitmask over the
/// system's generator indices. Generator indices follow the lexicographic
/// order of generator names, so iterating a subset visits its members in
/// sorted name order.
class GeneratorSubset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr GeneratorSubset() = default;
  constexpr explicit GeneratorSubset(std::uint64_t bits) : bits_(bits) {}
  constexpr GeneratorSubset(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) bits_ |= bit(i);
  }

  /// The subset {0, ..., n-1}.
  static constexpr GeneratorSubset first(std::size_t n) {
    return GeneratorSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr GeneratorSubset single(std::size_t i) { return GeneratorSubset(bit(i)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < 64 && (bits_ & bit(i)) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t least() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr void insert(std::size_t i) { bits_ |= bit(i); }
  constexpr void erase(std::size_t i) { bits_ &= ~bit(i); }

  constexpr GeneratorSubset with(std::size_t i) const { return GeneratorSubset(bits_ | bit(i)); }
  constexpr GeneratorSubset without(std::size_t i) const { return GeneratorSubset(bits_ & ~bit(i)); }

  constexpr bool subset_of(GeneratorSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(GeneratorSubset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(GeneratorSubset other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> indices() const { return {begin(), end()}; }

  friend constexpr GeneratorSubset operator|(GeneratorSubset a, GeneratorSubset b) {
    return GeneratorSubset(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSubset operator&(GeneratorSubset a, GeneratorSubset b) {
    return GeneratorSubset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr GeneratorSubset operator-(GeneratorSubset a, GeneratorSubset b) {
    return GeneratorSubset(a.bits_ & ~b.bits_);
  }
  constexpr GeneratorSubset& operator|=(GeneratorSubset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr GeneratorSubset& operator&=(GeneratorSubset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr GeneratorSubset& operator-=(GeneratorSubset o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(GeneratorSubset, GeneratorSubset) = default;

 private:
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists; a proper prefix sorts first.
/// This is the project-wide tie-breaking order.
constexpr bool lex_less(GeneratorSubset a, GeneratorSubset b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

/// Fewer members first, ties broken by lex_less.
constexpr bool size_lex_less(GeneratorSubset a, GeneratorSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

struct LexLess {
  constexpr bool operator()(GeneratorSubset a, GeneratorSubset b) const { return lex_less(a, b); }
};

/// Sorts by lex_less and removes duplicates.
void sort_unique(std::vector<GeneratorSubset>& family);

}  // namespace coxjsj
