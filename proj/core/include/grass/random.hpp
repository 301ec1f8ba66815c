#pragma once

#include <cstdint>
#include <random>

#include "grass/polynomial.hpp"

namespace grass {

/// Seeded generator for randomized sweeps. mt19937_64 output is fixed by the
/// standard; the bounded draws below avoid library-specific distributions so
/// sweeps are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial with up to `terms` terms of weighted degree <= max_weight
/// and integer coefficients in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(const RingContext& ctx, Rng& rng, int terms, int max_weight, int coeff_bound = 3);

}  // namespace grass
