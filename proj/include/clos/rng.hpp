#pragma once

#include <cstdint>
#include <random>

namespace clos {

// Uniform integer in [0, bound) via rejection sampling. std::mt19937_64 is
// bit-identical everywhere, the standard distributions are not, so range
// reduction is done by hand.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound) - 1;
  std::uint64_t value;
  do {
    value = rng();
  } while (value > limit);
  return value % bound;
}

// Uniform middle switch index in [1, n].
inline int uniform_middle(std::mt19937_64& rng, int n) {
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) +
         1;
}

}  // namespace clos
