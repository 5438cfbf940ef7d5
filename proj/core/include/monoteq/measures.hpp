#pragma once

#include <vector>

#include "monoteq/poset.hpp"
#include "monoteq/rational.hpp"

namespace monoteq {

/// A nonnegative rational measure on a finite poset (not necessarily a
/// probability measure).
struct RationalMeasure {
  Poset support;
  std::vector<Rat> mass;  // by element index

  Rat total() const;
  Rat mass_of(Mask subset) const;
  const Rat& at(int x) const { return mass[x]; }
};

/// Unit mass at x.
RationalMeasure unit_mass(const Poset& s, int x);
RationalMeasure unit_mass(const Poset& s, const std::string& x);

/// coef * (sum of unit masses over `subset`).
RationalMeasure scaled_indicator(const Poset& s, Mask subset, const Rat& coef);

/// A family of measures on a common support poset, indexed by a poset.
struct MeasureSystem {
  Poset index;    // the index poset
  Poset support;  // common support of every member
  std::vector<RationalMeasure> family;  // by index element

  const RationalMeasure& at(int alpha) const { return family[alpha]; }
};

MeasureSystem make_system(Poset index, Poset support, std::vector<RationalMeasure> family);

/// P precedes Q stochastically: P(U) <= Q(U) for every up-set U.
bool stoch_leq(const RationalMeasure& p, const RationalMeasure& q);

/// If P and Q are not stochastically ordered, an up-set witnessing the
/// violation; 0 when ordered. (All-zero witness never occurs: the empty
/// up-set always satisfies the inequality.)
Mask stoch_leq_witness(const RationalMeasure& p, const RationalMeasure& q);

/// P_alpha stochastically below P_beta whenever alpha <= beta.
bool system_is_stoch_monotone(const MeasureSystem& s);

/// Per-index mixture theta*P_alpha + (1-theta)*I_alpha, theta in (0,1].
/// The index poset must be an induced subposet of the support.
MeasureSystem weak_combination(const MeasureSystem& s, const Rat& theta);

/// Distribution function of a measure along a rooted tree:
/// F(x) = P((<-, x]) and F(x-) = P((<-, x)) in the tree order.
struct DistributionFunction {
  RootedTree tree;
  std::vector<Rat> f, f_minus;  // by element index

  Rat total() const { return f[tree.root()]; }
};

DistributionFunction distribution_function(const RationalMeasure& p, const RootedTree& t);

/// Section-based stochastic order on distribution functions over a common
/// rooted tree: F <= G requires F(x) >= G(x) where (<-, x] is a down-set
/// of the underlying poset and F(x) <= G(x) where it is an up-set.
bool df_stoch_leq(const DistributionFunction& f, const DistributionFunction& g);

}  // namespace monoteq
