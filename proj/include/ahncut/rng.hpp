#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>

namespace ahncut {

// Deterministic random source. The raw stream is std::mt19937_64 (whose output
// is fixed by the standard); all derived draws are computed here by hand so
// that sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x = next_u64();
    while (x > limit) x = next_u64();
    return x % n;
  }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    assert(lo <= hi);
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi) - lo + 1));
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform multiple of 1/64 in [0, max_value]; max_value must itself be a
  // multiple of 1/64. Keeps generated costs exactly representable so that
  // energy comparisons in tests are exact.
  double dyadic(double max_value) {
    const auto steps = static_cast<std::uint64_t>(std::llround(max_value * 64.0));
    return static_cast<double>(below(steps + 1)) / 64.0;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ahncut
