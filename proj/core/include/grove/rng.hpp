#pragma once

#include <cstdint>
#include <random>

namespace grove {

// Seeded RNG with a portable bounded draw. std::uniform_int_distribution is
// implementation-defined, so it must not appear anywhere a byte-for-byte
// reproducible artifact is produced.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= min) return r % bound;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace grove
