#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monoteq/poset.hpp"

namespace monoteq {

/// A maximal complete-bipartite Hasse subgraph: every element of `upper`
/// covers every element of `lower`, both sides are antichains of size >= 2.
struct BipartitePair {
  Mask lower = 0;
  Mask upper = 0;
  bool operator==(const BipartitePair&) const = default;
};

/// Result of the bipartite extension step: the extended poset with the
/// fresh midpoint vertex, and the two glued halves.
struct ExtSplit {
  Poset s_hat;
  Poset s1;
  Poset s2;
  std::string c_name;
};

/// The unique diamond of a W-glued diamond, as host indices, together
/// with the four Hasse components left after deleting the diamond arcs.
/// Each component contains its diamond vertex.
struct WGluedStructure {
  int a = -1, b = -1, c = -1, d = -1;
  Mask comp_a = 0, comp_b = 0, comp_c = 0, comp_d = 0;
};

struct Verdict {
  enum class Kind { Acyclic, YGluedBipartite, WGluedDiamond, Fails };
  Kind kind;
  std::optional<BipartitePair> bipartite;     // YGluedBipartite evidence
  std::optional<WGluedStructure> diamond;     // WGluedDiamond evidence
  std::string reason;                         // first violated condition on Fails
};

const char* verdict_kind_name(Verdict::Kind k);

/// True iff the (connected) Hasse diagram is a tree.
bool is_acyclic(const Poset& p);

/// Acyclic with no induced bowtie.
bool is_y_class(const Poset& p);

/// Y-class with neither the Y-poset nor its dual induced.
bool is_w_class(const Poset& p);

/// All maximal complete-bipartite Hasse subgraphs with both sides of
/// size >= 2 inducing the (m,n)-bipartite poset. Deterministic order.
std::vector<BipartitePair> maximal_bipartites(const Poset& p);

/// Removes the bipartite's cover edges, inserts a fresh midpoint c with
/// lower < c < upper, and splits the result into the half reachable
/// through the lower side and the half reachable through the upper side.
ExtSplit algorithm_ext(const Poset& p, const BipartitePair& pair);

/// Decision procedure: repeatedly contract maximal bipartite subgraphs
/// through the extension step; true iff some choice sequence reaches an
/// acyclic diagram. (Each step strictly reduces the cycle rank, so this
/// terminates.)
bool has_acyclic_extension(const Poset& p);

std::optional<BipartitePair> y_glued_bipartite_evidence(const Poset& p);
bool is_y_glued_bipartite(const Poset& p);

std::optional<WGluedStructure> w_glued_structure(const Poset& p);
bool is_w_glued_diamond(const Poset& p);

/// All labeled diamond embeddings grouped modulo the b<->c symmetry.
/// Each entry is (a, b, c, d) host indices with b < c as indices.
std::vector<std::array<int, 4>> induced_diamonds(const Poset& p);

Verdict verdict(const Poset& p);

}  // namespace monoteq
