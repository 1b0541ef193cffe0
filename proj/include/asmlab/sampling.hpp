#pragma once

// Seeded draws of small rationals for sampled-point verification. Only the
// raw output of std::mt19937_64 is used, so draws are identical on every
// platform for a given seed.

#include <cstdint>
#include <random>
#include <vector>

#include "asmlab/icemodel.hpp"
#include "asmlab/rational.hpp"

namespace asmlab {

class RationalSampler {
 public:
  /// Numerators in [-bound, bound] minus {0}, denominators in [1, bound].
  explicit RationalSampler(std::uint64_t seed, long bound = 50) : rng_(seed), bound_(bound) {}

  Rational draw() {
    long num = 0;
    while (num == 0) num = uniform(-bound_, bound_);
    return makeRational(num, uniform(1, bound_));
  }

  /// Parameters for which every determinant denominator in the six-vertex
  /// formulas is nonzero; degenerate draws are rejected and redrawn.
  SpectralParams drawSpectral(int n) {
    while (true) {
      SpectralParams p;
      p.q = draw();
      for (int i = 0; i < n; ++i) p.a.push_back(draw());
      for (int j = 0; j < n; ++j) p.b.push_back(draw());
      if (isGeneric(p)) return p;
    }
  }

  static bool isGeneric(const SpectralParams& p) {
    const Rational q2 = p.q * p.q;
    if (p.q == 0 || q2 == 1) return false;
    const std::size_t n = p.a.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ui = p.a[i] * p.a[i];
      for (std::size_t j = 0; j < n; ++j) {
        const Rational vj = p.b[j] * p.b[j];
        if (ui == vj || ui == q2 * vj) return false;
        if (j > i && (ui == p.a[j] * p.a[j] || p.b[i] * p.b[i] == vj)) return false;
      }
    }
    return true;
  }

  std::uint64_t raw() { return rng_(); }

 private:
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace asmlab
