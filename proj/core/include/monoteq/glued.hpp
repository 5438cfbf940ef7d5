#pragma once

#include <utility>
#include <vector>

#include "monoteq/classify.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"
#include "monoteq/rational.hpp"
#include "monoteq/realize.hpp"
#include "monoteq/rit.hpp"

namespace monoteq {

/// Result of extending a full-kernel system on a Y-glued bipartite poset
/// to its one-point acyclic extension: the shrink factor theta and a
/// stochastically monotone system indexed by and supported on the
/// extended poset. The added midpoint has zero mass under every original
/// row, and its own row is assembled from two feasibility solves.
struct BipartiteExtension {
  Rat theta;        // in (0, 1]
  ExtSplit split;   // extended poset and its two overlapping halves
  MeasureSystem extended;
};

BipartiteExtension extend_bipartite(const MeasureSystem& s);

/// Full realization on a Y-glued bipartite poset: a monotone-map law
/// realizing theta*P + (1-theta)*I, obtained through the acyclic
/// extension and restricted back to the original poset.
struct YGluedRealization {
  Rat theta;
  MapDistribution law;
};

YGluedRealization y_glued_realize(const MeasureSystem& s);

/// Modified recursive inverse transforms for a diamond-indexed system on
/// a Y-class poset glued from the chain a < b < d and a tree component
/// at b: the plain transforms on the tree with b's preimage partially
/// reassigned to a.
struct ModifiedTransforms {
  /// Tree on the support minus a, rooted at d. When the component hangs
  /// below b, the construction runs on the dual poset (rooted at a with
  /// the roles of a and d swapped) and `plane`, `mu`, and `base` refer
  /// to that dual tree; `modified` is always on the original support.
  PlaneTree plane;
  InterlacedDistribution mu;
  std::vector<InverseTransform> base;      // by diamond index, values in the tree
  std::vector<InverseTransform> modified;  // by diamond index, values in the support
  std::vector<Rat> gamma;                  // by diamond index
  std::vector<std::vector<std::pair<Rat, Rat>>> replaced;  // by diamond index
};

/// The system is indexed by a diamond poset; exactly one of the two
/// middle index elements must name an element of the support (that one
/// plays b). Interlacing and the exact marginals are validated during
/// the construction; HypothesisViolated/NotInterlaced otherwise.
ModifiedTransforms modified_rit_y(const MeasureSystem& q_tilde);

/// Decomposition of a diamond-indexed system on a two-sided glued
/// diamond (tails only at b and c) into one Y-class system per side,
/// with the combined modified transforms realizing P + theta_star * I.
struct DiamondDecomposition {
  WGluedStructure ws;         // diamond and components inside the support
  MeasureSystem q_prime;      // on the b-side Y-class subposet
  MeasureSystem q_dprime;     // on the c-side Y-class subposet
  Rat p, qp, qpp, q_tilde;    // masses: common, side totals, their sum
  Rat theta, theta_star;      // max{p - q, 0} and max{q - p, 0}
  std::vector<InverseTransform> transforms;  // by diamond index, values in support
};

DiamondDecomposition w_glued_split(const MeasureSystem& p_sys);

/// Full constructive realization on a W-glued diamond. The diamond
/// transforms realize P_alpha + theta_star * I_alpha exactly and are
/// pointwise monotone; the full-index law realizes
/// theta_weak * P + (1 - theta_weak) * (p * I) with
/// theta_weak = p / (p + theta_star).
struct WGluedRealization {
  WGluedStructure ws;
  Rat theta_star;
  Rat theta_weak;
  std::vector<InverseTransform> diamond_transforms;  // by diamond index
  Poset diamond_index;
  MapDistribution law;  // full index
};

WGluedRealization w_glued_realize(const MeasureSystem& p_sys);

/// Ordered realization of a stochastically ordered pair on a W-glued
/// diamond: two transforms on a common domain with exact marginals and
/// pointwise order.
std::pair<InverseTransform, InverseTransform> strassen_w_glued(
    const RationalMeasure& p1, const RationalMeasure& p2);

}  // namespace monoteq
