#pragma once

#include <cstdint>

namespace heptaknot {

// splitmix64: tiny, platform-stable generator. Seeded runs must reproduce
// bit-for-bit everywhere, so no std::random distributions are used.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiasedness is irrelevant here; stability is what matters.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace heptaknot
