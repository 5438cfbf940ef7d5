#pragma once

#include <utility>
#include <vector>

#include "monoteq/measures.hpp"
#include "monoteq/poset.hpp"
#include "monoteq/rational.hpp"
#include "monoteq/realize.hpp"

namespace monoteq {

/// One piece of a piecewise-constant map: [lo, hi) -> value.
struct Interval {
  Rat lo, hi;
  int value;  // element index in the support poset
  bool operator==(const Interval&) const = default;
};

/// A piecewise-constant map from [0, total) into a poset, kept as a
/// sorted list of disjoint half-open intervals covering the domain.
/// All verification against such maps is symbolic (interval lengths),
/// never by sampling.
struct InverseTransform {
  Poset support;
  std::vector<Interval> parts;

  Rat total() const;
  /// Value at a point of the domain; BadIndex outside [0, total).
  int value_at(const Rat& omega) const;
  /// Lebesgue measure of the preimage of one element.
  Rat length_where(int value) const;
  /// Lebesgue measure of the preimage of a set of elements.
  Rat length_in(Mask subset) const;
  /// Preimage of one element as merged, sorted intervals.
  std::vector<std::pair<Rat, Rat>> preimage(int value) const;
  /// Merge adjacent equal-valued parts and drop empty ones.
  void normalize();
  /// Reassign the value on the given segments from `from` to `to`.
  /// Every segment must currently be mapped to `from` in full;
  /// HypothesisViolated otherwise.
  void replace(const std::vector<std::pair<Rat, Rat>>& segments, int from, int to);
  /// All interval endpoints, sorted and deduplicated.
  std::vector<Rat> breakpoints() const;
  /// Same map with values translated into another poset by element name.
  InverseTransform relabeled(const Poset& to) const;
};

/// Union of all breakpoint sets of a family on a common domain.
std::vector<Rat> common_breakpoints(const std::vector<InverseTransform>& family);

/// x1(w) <= x2(w) in the common support, at every point of the common
/// domain (checked on the finite interval refinement).
bool pointwise_leq(const InverseTransform& x1, const InverseTransform& x2);

/// Whether the map realizes the distribution function: the preimage
/// length accumulated over each closed tree section equals f there.
bool realizes_df(const InverseTransform& x, const DistributionFunction& f);

/// Read a transform family (one per index element, common domain) along
/// its common interval refinement into a weighted family of maps.
MapDistribution transforms_to_map_distribution(const Poset& index,
                                               const std::vector<InverseTransform>& family);

/// One node of the plane-tree decomposition: a descending path of tree
/// vertices plus the child nodes hanging off its last vertex.
struct PlaneNode {
  std::vector<int> path;      // u_1 .. u_*, vertex indices
  int parent;                 // node id, -1 at the root node
  std::vector<int> children;  // node ids in canonical order
};

/// Decomposition of a rooted tree into vertex-disjoint descending paths:
/// each path runs from its starting vertex until it reaches a vertex
/// with no child, more than one child, or a designated stop vertex;
/// the subtrees at the last vertex's children become child nodes,
/// ordered by their starting vertex's element index.
class PlaneTree {
 public:
  explicit PlaneTree(RootedTree tree, Mask stop_at = 0);

  const RootedTree& tree() const { return tree_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  const PlaneNode& node(int k) const { return nodes_[k]; }
  int u1(int k) const { return nodes_[k].path.front(); }
  int u_star(int k) const { return nodes_[k].path.back(); }
  /// Last path vertex of the parent node; BadIndex at the root node.
  int extension_vertex(int k) const;
  /// Node whose path contains the given vertex.
  int node_of(int vertex) const { return node_of_[vertex]; }
  /// Vertex set of the subtree owned by node k.
  Mask vertices(int k) const { return tree_.section_closed(u1(k)); }

 private:
  RootedTree tree_;
  std::vector<PlaneNode> nodes_;
  std::vector<int> node_of_;
};

/// A distribution function on the plane tree's nodes: mu(k) with
/// mu(k-) = sum of mu over the children of k.
struct InterlacedDistribution {
  std::vector<Rat> mu;  // by plane-tree node

  const Rat& at(int k) const { return mu[k]; }
  Rat minus(const PlaneTree& k, int node) const;
  /// Sum of mu over the first `count` children of `node` (segment offsets).
  Rat prefix(const PlaneTree& k, int node, int count) const;
};

/// mu(k) = max{fa(u1(k)), fd(u1(k))}; interlaced with every F between fa
/// and fd. When check_order is set, fa and fd must satisfy df_stoch_leq
/// (NotOrdered otherwise); constructions on mixed glued trees skip the
/// check and rely on the interlacing validation downstream.
InterlacedDistribution interlaced_mu(const DistributionFunction& fa,
                                     const DistributionFunction& fd,
                                     const PlaneTree& k, bool check_order = true);

/// Recursive inverse transform of the subtree at `node`, on the local
/// domain [0, mu(node)): child segments laid out by prefix sums, then
/// the path segments swept from the deepest vertex up, then the parent's
/// extension vertex on the remainder. `f` holds the closed-section mass
/// of each tree vertex. Throws NotInterlaced when the interlacing
/// inequalities fail (at the root node, the domain must close exactly).
InverseTransform build_rit_node(const PlaneTree& k, const InterlacedDistribution& mu,
                                const std::vector<Rat>& f, int node);

/// The full transform: build_rit_node at the root node.
InverseTransform build_rit(const PlaneTree& k, const InterlacedDistribution& mu,
                           const std::vector<Rat>& f);

/// Closed-form preimage of u_*(node) in the node-local domain: the tail
/// piece above mu(node-) up to f(u_*), plus one piece per child segment.
/// Returned merged and sorted, for comparison against the recursion.
std::vector<std::pair<Rat, Rat>> u_star_preimage(const PlaneTree& k,
                                                 const InterlacedDistribution& mu,
                                                 const std::vector<Rat>& f, int node);

/// Realization of a stochastically monotone system on a W-class support
/// whose index poset has a minimum and a maximum: one shared interlaced
/// distribution, one transform per index element, jointly monotone.
struct WClassRealization {
  PlaneTree plane;
  InterlacedDistribution mu;
  std::vector<InverseTransform> transforms;  // by index element
};

WClassRealization w_class_realize(const MeasureSystem& s);

}  // namespace monoteq
