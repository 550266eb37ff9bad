#include "polwit/rng.hpp"

#include <cmath>
#include <sstream>

#include "polwit/error.hpp"

namespace polwit {

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t ordinal) {
  return splitmix64(master + (ordinal + 1) * 0x9E3779B97F4A7C15ull);
}

std::uint64_t Rng::poisson(double mean) {
  if (!std::isfinite(mean) || mean < 0.0) {
    std::ostringstream os;
    os << "Poisson mean must be finite and nonnegative, got " << mean;
    throw Error(Errc::invalid_argument, os.str());
  }
  if (mean == 0.0) return 0;

  if (mean < 10.0) {
    // Knuth: count uniforms until their product drops below exp(-mean).
    const double limit = std::exp(-mean);
    std::uint64_t n = 0;
    double prod = 1.0;
    do {
      ++n;
      prod *= uniform();
    } while (prod > limit);
    return n - 1;
  }

  // PTRS (Hoermann 1993): rejection from a transformed uniform envelope,
  // exact for mean >= 10.
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform();
    const double us = 0.5 - std::abs(u);
    if (us == 0.0) continue;
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace polwit
