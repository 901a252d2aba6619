#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace srgcl {

// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_keys(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t k : keys) h = splitmix64(h ^ k);
  return h;
}

/// Independent generator keyed by (seed, keys...). Streams with distinct keys
/// never share state, so per-anchor work stays deterministic regardless of
/// execution order.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {}) {
  return std::mt19937_64(mix_keys(seed, keys));
}

/// k distinct values from [0, n), uniform, via partial Fisher-Yates.
std::vector<int> sample_without_replacement(int n, int k, std::mt19937_64& rng);

/// Index draw proportional to nonnegative weights (need not be normalized).
int categorical_draw(const std::vector<double>& weights, std::mt19937_64& rng);

}  // namespace srgcl
