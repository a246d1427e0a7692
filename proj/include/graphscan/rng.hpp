#pragma once

#include <cstdint>
#include <random>

namespace graphscan {

/// splitmix64 finalizer; used to derive independent per-trial streams from
/// (master seed, trial index) so results do not depend on scheduling.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace graphscan
