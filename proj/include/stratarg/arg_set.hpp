#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace stratarg {

/// Index of an argument inside one framework. Indices follow the canonical
/// (sorted) order of argument ids.
using ArgIndex = std::size_t;

inline constexpr std::size_t max_arguments = 64;

/// A set of argument indices of one framework, stored as a 64-bit mask.
class ArgSet {
 public:
  using mask_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ArgIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ArgIndex;

    iterator() = default;
    explicit iterator(mask_type rest) : rest_(rest) {}

    ArgIndex operator*() const { return static_cast<ArgIndex>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    mask_type rest_ = 0;
  };

  constexpr ArgSet() = default;
  constexpr explicit ArgSet(mask_type bits) : bits_(bits) {}

  static constexpr ArgSet single(ArgIndex i) { return ArgSet(mask_type{1} << i); }
  /// The first `n` indices.
  static constexpr ArgSet prefix(std::size_t n) {
    return ArgSet(n >= 64 ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(ArgIndex i) const { return (bits_ >> i) & 1U; }
  constexpr bool intersects(ArgSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(ArgSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ArgSet o) const { return subset_of(o) && bits_ != o.bits_; }

  constexpr void insert(ArgIndex i) { bits_ |= mask_type{1} << i; }
  constexpr void erase(ArgIndex i) { bits_ &= ~(mask_type{1} << i); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr ArgSet operator|(ArgSet a, ArgSet b) { return ArgSet(a.bits_ | b.bits_); }
  friend constexpr ArgSet operator&(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & b.bits_); }
  friend constexpr ArgSet operator-(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & ~b.bits_); }
  constexpr ArgSet& operator|=(ArgSet o) { bits_ |= o.bits_; return *this; }
  constexpr ArgSet& operator&=(ArgSet o) { bits_ &= o.bits_; return *this; }
  constexpr ArgSet& operator-=(ArgSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ArgSet, ArgSet) = default;

 private:
  mask_type bits_ = 0;
};

/// Canonical order on sets: smaller sets first, then lexicographic on the
/// ascending index sequence.
inline bool canonical_less(ArgSet a, ArgSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

/// Expands a subset mask over `members` (bit k selects members[k]).
template <typename Range>
ArgSet expand_subset(const Range& members, std::uint64_t subset) {
  ArgSet out;
  std::size_t k = 0;
  for (ArgIndex i : members) {
    if ((subset >> k) & 1U) out.insert(i);
    ++k;
  }
  return out;
}

}  // namespace stratarg
