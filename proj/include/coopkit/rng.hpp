#pragma once

#include <cstdint>

#include "coopkit/scalars.hpp"

namespace coopkit {

/// SplitMix64. Hand-rolled so sampled test data is identical on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); n > 0. Modulo bias is irrelevant for test sampling.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool flip() { return next() & 1; }

 private:
  std::uint64_t state_;
};

/// Dyadic in [0, range] with exponent <= max_exp.
inline Dyadic sample_dyadic(Rng& rng, unsigned max_exp, unsigned range) {
  unsigned e = static_cast<unsigned>(rng.below(max_exp + 1));
  std::uint64_t hi = (static_cast<std::uint64_t>(range) << e) + 1;
  return Dyadic(BigInt(rng.below(hi)), e);
}

/// Rational in [0, range] with denominator <= max_den.
inline Rational sample_rational(Rng& rng, unsigned max_den, unsigned range) {
  std::uint64_t den = rng.below(max_den) + 1;
  std::uint64_t num = rng.below(range * den + 1);
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace coopkit
