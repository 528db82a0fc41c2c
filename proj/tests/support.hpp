#pragma once

#include <random>

#include "ammann/exactlin.hpp"

namespace ammann::test {

// Random golden numbers with small numerators and denominators; fixed seeds
// keep failures reproducible.
class GoldenSampler {
 public:
  explicit GoldenSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int span = 12) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(rng_), den(rng_));
  }

  Golden golden(int span = 12) { return Golden(rational(span), rational(span)); }

  Golden nonzero(int span = 12) {
    Golden x;
    while (x.is_zero()) x = golden(span);
    return x;
  }

  template <std::size_t N>
  GVec<N> vec(int span = 12) {
    GVec<N> v;
    for (auto& x : v) x = golden(span);
    return v;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Golden G(long a, long b) { return Golden(a, b); }
inline Golden Gq(long an, long ad, long bn, long bd) { return Golden::from_fractions(an, ad, bn, bd); }
inline GVec3 v3(Golden x, Golden y, Golden z) { return GVec3{{std::move(x), std::move(y), std::move(z)}}; }

}  // namespace ammann::test
