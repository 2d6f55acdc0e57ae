#ifndef LIESTRAT_RNG_HPP
#define LIESTRAT_RNG_HPP

#include <cstdint>
#include <vector>

#include "liestrat/rational.hpp"

namespace liestrat {

/// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
/// distributions so that identical seeds give identical streams on every
/// platform and standard library.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n); modulo bias is irrelevant here.
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + long(below(uint64_t(hi - lo + 1)));
  }
};

/// Random rational with numerator in [-height, height] and denominator in
/// [1, height], canonicalized.
inline Rational random_rational(SplitMix64& rng, int height) {
  long num = rng.int_in(-height, height);
  long den = rng.int_in(1, height);
  return rational(num, den);
}

inline std::vector<Rational> random_functional(SplitMix64& rng, int dim, int height) {
  std::vector<Rational> v;
  v.reserve(dim);
  for (int i = 0; i < dim; ++i) v.push_back(random_rational(rng, height));
  return v;
}

/// Random nonzero functional (resamples until some coordinate is nonzero).
inline std::vector<Rational> random_nonzero_functional(SplitMix64& rng, int dim, int height) {
  for (;;) {
    std::vector<Rational> v = random_functional(rng, dim, height);
    for (const Rational& q : v)
      if (!is_zero(q)) return v;
  }
}

}  // namespace liestrat

#endif
