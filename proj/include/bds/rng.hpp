#pragma once

#include <cstdint>
#include <random>

namespace bds {

// std::uniform_int_distribution is implementation-defined, so generators use
// this rejection sampler on top of the (standardized) mt19937_64 stream to
// stay byte-for-byte reproducible across toolchains.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace bds
