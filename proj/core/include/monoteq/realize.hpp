#pragma once

#include <optional>
#include <vector>

#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"
#include "monoteq/rational.hpp"

namespace monoteq {

/// A nonnegative weighting of monotone maps from an index poset into a
/// support poset; the law of a random monotone map.
struct MapDistribution {
  Poset index;
  Poset support;
  std::vector<MonotoneMap> maps;  // support of the law (positive weight)
  std::vector<Rat> weight;        // parallel, > 0

  Rat total() const;
  /// Marginal law at index element alpha.
  RationalMeasure marginal(int alpha) const;
  bool realizes(const MeasureSystem& s) const;  // exact marginal equality
};

/// A coupling of two measures supported on the order relation
/// {(x, y) : x <= y}.
struct PairCoupling {
  Poset support;
  std::vector<std::vector<Rat>> weight;  // weight[x][y], zero off the order

  RationalMeasure first_marginal() const;
  RationalMeasure second_marginal() const;
};

/// Exact realizing law over monotone maps, or definitive absence.
/// Requires the system's marginal constraints to be met exactly:
/// sum over h with h(alpha) = x of w(h) equals P_alpha(x).
std::optional<MapDistribution> is_realizably_monotone(const MeasureSystem& s,
                                                      unsigned long bound = 4000000);

/// Largest theta in [0, 1] with theta*P + (1-theta)*I realizably
/// monotone, computed as one joint linear program; 0 means the system is
/// not realizably weakly monotone.
Rat max_theta(const MeasureSystem& s, unsigned long bound = 4000000);

/// Ordered coupling with the given marginals, or definitive absence;
/// exists exactly when stoch_leq(p1, p2).
std::optional<PairCoupling> strassen_lp(const RationalMeasure& p1,
                                        const RationalMeasure& p2);

/// Constructive realization for an acyclic connected index poset: root
/// the index tree, couple each tree edge, and glue the couplings by
/// conditional products edge by edge.
MapDistribution realize_acyclic(const MeasureSystem& s);

/// Conditional-product gluing of two map distributions whose index posets
/// share exactly the element `shared` and agree in law there.
MapDistribution glue_realizations(const MapDistribution& d1, const MapDistribution& d2,
                                  const std::string& shared);

}  // namespace monoteq
