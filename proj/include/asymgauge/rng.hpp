#pragma once

// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
// distributions so that generated structures are identical across standard
// libraries and compilers; reproducibility from a seed is part of the
// contract of the law suite.

#include <cstdint>

namespace asymgauge {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Inclusive range; modulo bias is irrelevant at test scale.
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x632be59bd9b4e019ULL + (b << 16) + (b >> 3)));
  g.next();
  return g.next();
}

}  // namespace asymgauge
