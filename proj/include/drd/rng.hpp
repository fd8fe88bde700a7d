#pragma once

#include <cstdint>

namespace drd {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because it is tiny, has a
/// fixed published definition and is trivial to reproduce in any language,
/// so seeded corpora replicate bit-for-bit across implementations.
///
/// Derived draws:
///   uniform_int(lo, hi): r = hi - lo + 1; redraw while x < (2^64 mod r);
///                        return lo + x mod r.
///   bernoulli(p):        (x >> 11) * 2^-53 < p.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit span
    const std::uint64_t limit = -range % range;  // 2^64 mod range
    std::uint64_t x = next();
    while (x < limit) x = next();
    return lo + static_cast<std::int64_t>(x % range);
  }

  bool bernoulli(double p) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::uint64_t state_;
};

/// Independent sub-stream seed for the `index`-th item drawn under `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mix.next();
}

}  // namespace drd
