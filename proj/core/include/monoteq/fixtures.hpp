#pragma once

#include <string>
#include <vector>

#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"

namespace monoteq {

/// A packaged counterexample: a stochastically monotone system that is
/// nevertheless not realizably weakly monotone (max_theta = 0). The
/// expectations are re-checked by `fixtures check`, not trusted.
struct Fixture {
  std::string tag;       // short structural name of the host
  MeasureSystem system;  // support = host poset; index = host or its diamond
};

/// Hosts with a maximal complete bipartite whose extension midpoint
/// cannot be consistently charged. Variant 0 places the distinguished
/// element among the bipartite's upper side; variant 1 places it inside
/// the lower component. Full-kernel systems.
Fixture fixture_bipartite_violation(int variant);

/// Hosts where a second cycle meets the diamond: variant 0 glues a
/// bowtie at the diamond's bottom, variant 1 at a middle corner,
/// variant 2 stacks a second diamond on top. Diamond-indexed systems.
Fixture fixture_second_cycle(int variant);

/// Host with a three-pronged branch sharing one element with the
/// diamond. Diamond-indexed system.
Fixture fixture_yposet();

std::vector<Fixture> all_fixtures();

/// Extend a diamond-indexed system to a full kernel on the host:
/// elements above a middle corner receive the top row, elements
/// comparable to neither middle receive the bottom row, the corners keep
/// their own rows. RuleGap when an element matches no clause;
/// NotStochasticallyMonotone when the extension breaks monotonicity.
MeasureSystem extend_to_full(const MeasureSystem& diamond_sys);

}  // namespace monoteq
