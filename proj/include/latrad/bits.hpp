#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace latrad {

// Largest lattice the library will build. Bitsets are fixed width so that
// element sets and relation rows are plain values.
inline constexpr int kMaxElems = 256;

class Bits {
public:
  static constexpr int kWords = kMaxElems / 64;

  Bits() = default;

  static Bits single(int i) {
    Bits b;
    b.set(i);
    return b;
  }
  static Bits prefix(int n) {
    Bits b;
    for (int k = 0; k < kWords; ++k) {
      int lo = k * 64;
      if (n >= lo + 64)
        b.w_[k] = ~uint64_t{0};
      else if (n > lo)
        b.w_[k] = (uint64_t{1} << (n - lo)) - 1;
    }
    return b;
  }
  static Bits of(const std::vector<int>& xs) {
    Bits b;
    for (int x : xs) b.set(x);
    return b;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void set(int i, bool v) { v ? set(i) : reset(i); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set index, or -1.
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return -1;
  }
  // Highest set index, or -1.
  int last() const {
    for (int k = kWords - 1; k >= 0; --k)
      if (w_[k]) return k * 64 + 63 - std::countl_zero(w_[k]);
    return -1;
  }

  bool subset_of(const Bits& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits&, const Bits&) = default;

  template <class F>
  void each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> list() const {
    std::vector<int> out;
    out.reserve(count());
    each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

private:
  std::array<uint64_t, kWords> w_{};
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace latrad
