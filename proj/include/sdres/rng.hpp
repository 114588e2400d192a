#pragma once

#include <cstdint>
#include <random>

#include "sdres/bigint.hpp"

namespace sdres {

// Seeded generator with a platform-independent integer mapping.
// std::uniform_int_distribution is not portable across standard libraries,
// so ranges are drawn by rejection sampling on raw mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // Uniform integer in [-2^31, 2^31], the specialization range for rank tests.
  BigInt wide() { return BigInt(static_cast<long>(uniform(-(1LL << 31), 1LL << 31))); }

  // Nonzero integer in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    std::int64_t v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; derives independent per-stage seeds from one user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sdres
