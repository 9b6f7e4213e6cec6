#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

// Reproducible randomness. std::mt19937_64 supplies raw 64-bit draws; every
// mapping onto ints/reals/permutations is implemented here because the standard
// <random> distributions are implementation-defined and would break the
// byte-identical-reports contract across toolchains.
//
// Seed derivation is a documented splittable scheme so that independent parts
// of an experiment (pool entries, runs, per-k k-means) each own a private
// stream and adding consumers never perturbs existing ones:
//
//   derive_seed(master, index, tag) =
//     mix(mix(master ^ mix((index+1)*GOLDEN)) ^ fnv1a64(tag))
//
// where mix is the SplitMix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.

namespace concord::rng {

using engine = std::mt19937_64;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer (Steele et al.); bijective on uint64.
constexpr std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                    std::string_view tag) {
  return mix(mix(master ^ mix((index + 1) * kGolden)) ^ fnv1a64(tag));
}

inline engine make_engine(std::uint64_t seed) { return engine(seed); }

inline std::uint64_t next_u64(engine& g) { return g(); }

// Unbiased uniform draw from [0, bound) by rejection; bound >= 1.
std::uint64_t uniform_u64(engine& g, std::uint64_t bound);

// Inclusive integer range [lo, hi].
int uniform_int(engine& g, int lo, int hi);

// [0, 1) with 53 random bits — the exact dyadic construction.
inline double uniform01(engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_real(engine& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// In-place Fisher–Yates; identical results on every platform.
template <typename T>
void shuffle(std::vector<T>& v, engine& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_u64(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

// First m entries of a seeded permutation of 0..n-1. Prefixes are nested:
// the same engine state yields sample(n, m1) ⊂ sample(n, m2) for m1 <= m2.
std::vector<int> sample_without_replacement(int n, int m, engine& g);

}  // namespace concord::rng
