#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace oneshot {

// Fixed 128-bit vertex set. All combinatorial searches run on these;
// instances above 128 vertices are rejected upstream.
struct Bits {
  std::uint64_t lo = 0, hi = 0;

  static Bits one(int i) {
    Bits b;
    if (i < 64)
      b.lo = std::uint64_t{1} << i;
    else
      b.hi = std::uint64_t{1} << (i - 64);
    return b;
  }
  static Bits first_n(int n) {
    Bits b;
    if (n >= 128) {
      b.lo = b.hi = ~std::uint64_t{0};
    } else if (n > 64) {
      b.lo = ~std::uint64_t{0};
      b.hi = (std::uint64_t{1} << (n - 64)) - 1;
    } else if (n == 64) {
      b.lo = ~std::uint64_t{0};
    } else if (n > 0) {
      b.lo = (std::uint64_t{1} << n) - 1;
    }
    return b;
  }

  bool test(int i) const { return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1; }
  void set(int i) {
    if (i < 64)
      lo |= std::uint64_t{1} << i;
    else
      hi |= std::uint64_t{1} << (i - 64);
  }
  void reset(int i) {
    if (i < 64)
      lo &= ~(std::uint64_t{1} << i);
    else
      hi &= ~(std::uint64_t{1} << (i - 64));
  }

  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool any() const { return lo || hi; }
  bool none() const { return !any(); }
  // Index of the lowest set bit; undefined when empty.
  int lowest() const { return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi); }

  friend Bits operator&(Bits a, Bits b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend Bits operator|(Bits a, Bits b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend Bits operator~(Bits a) { return {~a.lo, ~a.hi}; }
  friend Bits operator-(Bits a, Bits b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }
  Bits& operator|=(Bits b) { lo |= b.lo; hi |= b.hi; return *this; }
  Bits& operator&=(Bits b) { lo &= b.lo; hi &= b.hi; return *this; }
  friend bool operator==(Bits a, Bits b) = default;

  bool intersects(Bits b) const { return (lo & b.lo) || (hi & b.hi); }
  bool contains(Bits b) const { return (b.lo & ~lo) == 0 && (b.hi & ~hi) == 0; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      f(i);
    }
    for (std::uint64_t w = hi; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      f(64 + i);
    }
  }
};

}  // namespace oneshot

template <>
struct std::hash<oneshot::Bits> {
  std::size_t operator()(const oneshot::Bits& b) const {
    return std::hash<std::uint64_t>{}(b.lo) ^ (std::hash<std::uint64_t>{}(b.hi) * 0x9e3779b97f4a7c15ULL);
  }
};
