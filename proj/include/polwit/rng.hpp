#pragma once

#include <cstdint>
#include <random>

namespace polwit {

// SplitMix64 finalizer (Steele, Lea & Flood); bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for substream `ordinal` of a master seed. Stable contract:
//   derive_seed(m, k) = splitmix64(m + (k + 1) * 0x9E3779B97F4A7C15).
// Independent substreams let settings and sweep points be sampled
// concurrently without sharing generator state.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t ordinal);

// Deterministic sampler: mt19937_64 core, 53-bit uniforms, and a Poisson
// sampler that is exact for every mean (Knuth's product method below mean
// 10, Hoermann's PTRS transformed rejection above it).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 gen_;
};

}  // namespace polwit
