#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace tripsys {

// Fixed-width bitset with word-level access and fast iteration over set bits.
template <std::size_t Words>
class BitArray {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kBits = Words * 64;

  constexpr BitArray() = default;

  constexpr bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  constexpr void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // Sets bits [0, count).
  constexpr void set_prefix(std::size_t count) {
    for (std::size_t k = 0; k < Words; ++k) {
      std::size_t lo = k * 64;
      if (count >= lo + 64) {
        w_[k] = ~std::uint64_t{0};
      } else if (count > lo) {
        w_[k] = (std::uint64_t{1} << (count - lo)) - 1;
      } else {
        w_[k] = 0;
      }
    }
  }

  constexpr bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const { return !any(); }

  constexpr int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  constexpr bool intersects(const BitArray& o) const {
    for (std::size_t k = 0; k < Words; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  constexpr bool is_subset_of(const BitArray& o) const {
    for (std::size_t k = 0; k < Words; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  constexpr int intersection_count(const BitArray& o) const {
    int c = 0;
    for (std::size_t k = 0; k < Words; ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  // Index of the lowest set bit, or kBits when empty.
  constexpr std::size_t first() const {
    for (std::size_t k = 0; k < Words; ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return kBits;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < Words; ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  constexpr BitArray& operator&=(const BitArray& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  constexpr BitArray& operator|=(const BitArray& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // this &= ~o
  constexpr BitArray& subtract(const BitArray& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend constexpr BitArray operator&(BitArray a, const BitArray& b) { return a &= b; }
  friend constexpr BitArray operator|(BitArray a, const BitArray& b) { return a |= b; }
  friend constexpr BitArray operator-(BitArray a, const BitArray& b) { return a.subtract(b); }

  constexpr std::uint64_t word(std::size_t k) const { return w_[k]; }
  constexpr std::uint64_t& word(std::size_t k) { return w_[k]; }

  friend constexpr bool operator==(const BitArray&, const BitArray&) = default;

  // Orders by the lowest differing bit: the set containing it sorts first.
  // Matches lexicographic order on ascending index lists of equal length.
  friend constexpr std::strong_ordering operator<=>(const BitArray& a, const BitArray& b) {
    for (std::size_t k = 0; k < Words; ++k) {
      std::uint64_t d = a.w_[k] ^ b.w_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.w_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  // Copies the low bits of another width; excess source bits are dropped.
  template <std::size_t Other>
  static constexpr BitArray from(const BitArray<Other>& src) {
    BitArray out;
    for (std::size_t k = 0; k < Words && k < Other; ++k) out.w_[k] = src.word(k);
    return out;
  }

 private:
  std::array<std::uint64_t, Words> w_{};
};

}  // namespace tripsys
