#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monoteq/error.hpp"

namespace monoteq {

/// Subsets of poset elements as bit masks (bit i = element with index i).
using Mask = std::uint32_t;

constexpr int kMaxElements = 24;

int popcount(Mask m);

/// A finite poset over string identifiers. Elements are stored sorted
/// lexicographically; every enumeration in the library is fixed by that
/// index order. Immutable after construction.
class Poset {
 public:
  /// Builds a poset from its Hasse diagram. `covers` pairs are (x, y)
  /// with y covering x. Rejects unknown elements, directed cycles, and
  /// covers already implied transitively (the input must be a Hasse
  /// diagram, not an arbitrary order relation).
  static Poset from_cover_edges(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds from a full order relation given as up-masks; covers are
  /// recomputed as the transitive reduction. Used internally by induced()
  /// and the enumeration utilities.
  static Poset from_order(const std::vector<std::string>& elements,
                          const std::vector<Mask>& up);

  int size() const { return static_cast<int>(names_.size()); }
  Mask all() const { return (Mask{1} << size()) - 1; }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;   // throws UnknownElement
  int find(const std::string& name) const;       // -1 if absent

  bool leq(int i, int j) const { return (up_[i] >> j) & 1; }
  bool leq(const std::string& x, const std::string& y) const;
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  Mask up_of(int i) const { return up_[i]; }      // {j : i <= j}
  Mask down_of(int i) const { return down_[i]; }  // {j : j <= i}
  Mask covers_of(int i) const { return cov_up_[i]; }    // elements covering i
  Mask covered_by(int i) const { return cov_down_[i]; } // elements i covers
  bool is_cover(int lo, int hi) const { return (cov_up_[lo] >> hi) & 1; }

  /// Cover pairs (lo, hi), hi covers lo, in canonical order.
  std::vector<std::pair<int, int>> cover_pairs() const;
  int cover_count() const;

  bool is_up_set(Mask u) const;
  bool is_down_set(Mask u) const;

  /// All up-sets including the empty set and the whole set, in canonical
  /// (ascending mask) order. Generated by descending the order rather
  /// than filtering all subsets.
  std::vector<Mask> up_sets() const;

  /// Ordering restricted to `subset`; covers recomputed by transitive
  /// reduction (an induced subposet's Hasse diagram is not the induced
  /// subgraph).
  Poset induced(Mask subset) const;
  Poset induced(const std::vector<std::string>& subset) const;

  Poset dual() const;

  /// Connectivity of the Hasse diagram viewed as an undirected graph.
  bool connected() const;

  /// Minimal-first linear extension, ties broken by element index.
  std::vector<int> linear_extension() const;

  Mask minimal_elements() const;
  Mask maximal_elements() const;

  bool same_order_as(const Poset& other) const;  // identical names and relation

 private:
  Poset() = default;
  std::vector<std::string> names_;
  std::vector<Mask> up_, down_, cov_up_, cov_down_;
  void derive_from_up();
  Mask down_helper(int j) const;
};

/// Union of two posets sharing exactly the element `shared`.
Poset glue(const Poset& p1, const Poset& p2, const std::string& shared);

/// All injective maps pattern -> host that are order-isomorphisms onto
/// their image, as vectors indexed by pattern element. Deterministic order.
std::vector<std::vector<int>> find_induced(const Poset& host, const Poset& pattern);

bool has_induced(const Poset& host, const Poset& pattern);

bool is_isomorphic(const Poset& a, const Poset& b);

/// A monotone map from poset A to poset S, by element index.
struct MonotoneMap {
  std::vector<int> assignment;  // assignment[i in A] = index in S
  bool operator==(const MonotoneMap&) const = default;
  bool operator<(const MonotoneMap& o) const { return assignment < o.assignment; }
};

bool is_monotone(const Poset& a, const Poset& s, const std::vector<int>& assignment);

/// All monotone maps A -> S in lexicographic order of assignment.
/// Throws SizeLimit if |S|^|A| exceeds `bound`.
std::vector<MonotoneMap> monotone_maps(const Poset& a, const Poset& s,
                                       unsigned long bound = 4000000);

/// A tree-shaped poset rooted at a maximal or minimal element; x <=_tau y
/// iff the Hasse path from the root to x passes through y.
class RootedTree {
 public:
  RootedTree(Poset poset, int root);
  RootedTree(Poset poset, const std::string& root);

  const Poset& poset() const { return poset_; }
  int root() const { return root_; }
  int parent(int x) const { return parent_[x]; }  // -1 at root
  const std::vector<int>& children(int x) const { return children_[x]; }

  bool tree_leq(int x, int y) const;  // x <=_tau y
  Mask section_closed(int x) const { return subtree_[x]; }  // (<-, x]
  Mask section_open(int x) const { return subtree_[x] & ~(Mask{1} << x); }

  /// Whether (<-, x] is a down-set of the underlying poset. When it is
  /// neither a down-set nor an up-set the tree cannot carry distribution
  /// functions; both predicates then return false.
  bool closed_section_is_down_set(int x) const;
  bool closed_section_is_up_set(int x) const;

 private:
  void build();
  Poset poset_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<Mask> subtree_;
};

}  // namespace monoteq
