#pragma once

#include <cstdint>

namespace zetalab {

// Counter-based generator built on the splitmix64 finalizer.  Every draw is a
// pure function of (seed, stream, index), so results do not depend on the
// order in which samples are evaluated or on how work is chunked.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t keyed_rand(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

// Uniform in [0, 1), 53 mantissa bits.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t index) {
  return static_cast<double>(keyed_rand(seed, stream, index) >> 11) *
         0x1.0p-53;
}

// Fair +/-1 coin.
inline int keyed_sign(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t index) {
  return (keyed_rand(seed, stream, index) >> 63) ? 1 : -1;
}

}  // namespace zetalab
