#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace latrad {

// Seeded generator. Only raw engine output is used so sequences are the same
// on every standard library.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<uint64_t>(n)); }
  bool coin() { return eng_() & 1; }
  // true with probability num/den
  bool chance(int num, int den) { return below(den) < num; }

private:
  std::mt19937_64 eng_;
};

template <class Range, class F>
std::string join_str(const Range& xs, const std::string& sep, F&& fmt) {
  std::ostringstream os;
  bool firstItem = true;
  for (const auto& x : xs) {
    if (!firstItem) os << sep;
    firstItem = false;
    os << fmt(x);
  }
  return os.str();
}

}  // namespace latrad
