#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "monoteq/markov.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"

namespace monoteq {

/// All connected posets on n elements up to isomorphism, elements named
/// x0..x{n-1}, in a canonical deterministic order. Supported for
/// 1 <= n <= 6 (the 6-element count is 238).
std::vector<Poset> connected_posets(int n);

/// Deterministic seeded randomness for test-input generation. All draws
/// are integer-based, so generated rationals are exact.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform rational k/d with k in [0, d], d in [1, max_den].
  Rat unit_rat(int max_den = 6);

 private:
  std::mt19937_64 eng_;
};

/// A random probability measure on p (random numerators over a common
/// random denominator).
RationalMeasure random_measure(const Poset& p, RandomSource& rng);

/// A random vertex-averaged point of the stochastically monotone kernel
/// polytope: two random-objective LP solves, averaged. Full kernel.
MeasureSystem random_monotone_kernel(const Poset& p, RandomSource& rng);

/// A random pair P1 stochastically below P2, sampled from the ordered-
/// pair polytope the same way.
std::pair<RationalMeasure, RationalMeasure> random_ordered_pair(const Poset& p,
                                                                RandomSource& rng);

/// A random conservative generator with small rational off-diagonal
/// rates (some zero), guaranteed lambda* > 0.
Generator random_generator(const Poset& p, RandomSource& rng);

/// A random connected W-class poset on n elements (random Hasse tree,
/// rejection against the class predicate).
Poset random_w_class_poset(int n, RandomSource& rng);

/// A random W-glued diamond host on n >= 4 elements: a diamond grown by
/// random single-element attachments, each kept only when the verdict
/// stays W-glued.
Poset random_w_glued_diamond(int n, RandomSource& rng);

}  // namespace monoteq
