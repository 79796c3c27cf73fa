// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_RNG_HPP
#define FSOS_RNG_HPP

#include <cstdint>
#include <string_view>

namespace fsos {

// Deterministic, platform-independent sample generator (splitmix64 core).
// Each (seed, suite, sample index) triple derives an independent stream, so
// parallel sweep order cannot affect the values drawn.
struct Sampler {
  std::uint64_t state;

  explicit Sampler(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = seed ^ fnv1a(tag);
  h ^= 0x9e3779b97f4a7c15ULL + index + (h << 6) + (h >> 2);
  Sampler mix(h);
  return mix.next();
}

}  // namespace fsos

#endif
