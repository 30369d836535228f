#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace robsel {

// mt19937_64 with explicit output mappings. std::uniform_int_distribution is
// implementation-defined, and tests freeze exact per-seed outputs, so every
// draw goes through these helpers instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in {0, ..., bound-1}, rejection sampled so there is no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in {lo, ..., hi} inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double q) { return unit() < q; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace robsel
