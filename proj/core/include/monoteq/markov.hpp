#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"
#include "monoteq/rational.hpp"

namespace monoteq {

/// Conservative generator of a continuous-time Markov chain on a poset:
/// nonnegative off-diagonal rates, diagonal fixed by zero row sums, and a
/// strictly positive maximal exit rate.
class Generator {
 public:
  /// `rates` holds L(x, y) for all pairs; diagonal entries are ignored
  /// and recomputed from the row sums.
  Generator(Poset states, std::vector<std::vector<Rat>> rates);

  const Poset& states() const { return states_; }
  const Rat& rate(int x, int y) const { return rates_[x][y]; }
  const Rat& lambda_star() const { return lambda_star_; }

  /// L(x, A) = sum of L(x, y) over y in A.
  Rat rate_into(int x, Mask a) const;

 private:
  Poset states_;
  std::vector<std::vector<Rat>> rates_;
  Rat lambda_star_;
};

struct TransitionKernel {
  Poset states;
  std::vector<std::vector<Rat>> q;  // row-stochastic

  /// Row x as a measure on the state poset.
  RationalMeasure row(int x) const;
  /// The rows viewed as a measure system indexed by the state poset itself.
  MeasureSystem as_system() const;
};

/// Q(x, y) = I(x, y) + L(x, y)/lambda; requires lambda >= lambda*.
TransitionKernel uniformize(const Generator& l, const Rat& lambda);

bool kernel_is_stoch_monotone(const TransitionKernel& q);

/// Rate criterion for stochastic monotonicity: over comparable x <= y,
/// L(x, U) <= L(y, U) for up-sets U avoiding y and L(x, U^c) >= L(y, U^c)
/// for up-sets U containing x.
bool massey_check(const Generator& l);

/// Stochastic monotonicity through uniformization at 2*lambda*.
bool sm_continuous(const Generator& l);

/// Nonnegative weights on monotone self-maps (identity excluded) whose
/// point-mass mixture reproduces every off-diagonal rate:
/// L(x, y) = sum over h with h(x) = y of gamma(h), x != y.
struct GeneratorDecomposition {
  std::vector<MonotoneMap> maps;  // monotone self-maps, identity excluded
  std::vector<Rat> gamma;         // parallel weights, >= 0
  Rat total_rate() const;         // sum of gamma
};

std::optional<GeneratorDecomposition> decompose_generator(
    const Generator& l, unsigned long bound = 4000000);

struct PathEvent {
  double time;
  std::string state;
};

/// Demonstration-only sampler: a Poisson clock at rate lambda* drives the
/// uniformized kernel; only state changes are reported (plus the initial
/// state at time 0). Deterministic for a fixed seed. The only
/// floating-point corner of the library.
std::vector<PathEvent> simulate_path(const Generator& l, const std::string& x0,
                                     double horizon, std::uint64_t seed);

/// Monotonicity equivalence for continuous-time chains on P: holds
/// exactly when the classification verdict is not "fails".
bool ct_equivalence(const Poset& p);

}  // namespace monoteq
