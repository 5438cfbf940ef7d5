#pragma once

// Independent oracles and random-instance builders shared by the unit
// tests and the acceptance suite. Everything here deliberately avoids
// the library's own search strategies so that agreement is evidence.

#include <algorithm>
#include <set>
#include <vector>

#include "monoteq/classify.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/lp.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/patterns.hpp"
#include "monoteq/poset.hpp"
#include "monoteq/realize.hpp"
#include "monoteq/rit.hpp"

namespace testing_oracles {

using namespace monoteq;

/// Brute-force induced-pattern test: try every injective assignment of
/// pattern elements to host elements and compare the full relations.
inline bool induced_oracle(const Poset& host, const Poset& pattern) {
  int n = host.size(), k = pattern.size();
  if (k > n) return false;
  // Enumerate all k-permutations of the host elements.
  std::vector<bool> used(n, false);
  std::vector<int> choice(k, -1);
  int depth = 0;
  while (depth >= 0) {
    int& c = choice[depth];
    if (c >= 0) used[c] = false;
    ++c;
    while (c < n && used[c]) ++c;
    if (c >= n) {
      choice[depth] = -1;
      --depth;
      continue;
    }
    used[c] = true;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j) {
      bool p1 = pattern.leq(j, depth), p2 = pattern.leq(depth, j);
      bool h1 = host.leq(choice[j], c), h2 = host.leq(c, choice[j]);
      ok = (p1 == h1) && (p2 == h2);
    }
    if (!ok) continue;
    if (depth + 1 == k) return true;
    ++depth;
  }
  return false;
}

/// Stochastic order by scanning every subset and filtering up-sets,
/// without the library's up-set generator.
inline bool stoch_leq_oracle(const RationalMeasure& p, const RationalMeasure& q) {
  const Poset& s = p.support;
  for (Mask u = 0; u <= s.all(); ++u) {
    bool up = true;
    for (int i = 0; i < s.size() && up; ++i)
      if ((u >> i) & 1)
        if ((s.up_of(i) & ~u) != 0) up = false;
    if (up && p.mass_of(u) > q.mass_of(u)) return false;
  }
  return true;
}

/// Depth-bounded exhaustive extension search: no memoization, no
/// canonical pruning; the bound is the Hasse cycle rank, which each
/// extension step strictly decreases.
inline bool acyclic_extension_oracle(const Poset& p, int depth = -1) {
  if (depth < 0) depth = p.cover_count() - p.size() + 1;
  if (p.cover_count() == p.size() - 1) return true;
  if (depth == 0) return false;
  for (const BipartitePair& pair : maximal_bipartites(p))
    if (acyclic_extension_oracle(algorithm_ext(p, pair).s_hat, depth - 1))
      return true;
  return false;
}

/// A random stochastically monotone system with a given index poset on
/// an arbitrary support: LP vertex averaging under the dominance rows of
/// the index relation. Unit total mass per row.
inline MeasureSystem random_indexed_system(const Poset& index, const Poset& support,
                                           RandomSource& rng) {
  int n = support.size(), k = index.size();
  LinearProgram lp;
  for (int i = 0; i < k * n; ++i) lp.add_var(true);
  for (int a = 0; a < k; ++a) {
    std::vector<std::pair<int, Rat>> row;
    for (int y = 0; y < n; ++y) row.emplace_back(a * n + y, 1);
    lp.add_row(row, LinearProgram::Rel::Eq, 1);
  }
  std::vector<Mask> ups = support.up_sets();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !index.leq(a, b)) continue;
      for (Mask u : ups) {
        std::vector<std::pair<int, Rat>> row;
        for (int y = 0; y < n; ++y)
          if ((u >> y) & 1) {
            row.emplace_back(a * n + y, 1);
            row.emplace_back(b * n + y, -1);
          }
        if (!row.empty()) lp.add_row(row, LinearProgram::Rel::Le, 0);
      }
    }
  auto vertex = [&]() {
    LinearProgram copy = lp;
    for (int v = 0; v < copy.num_vars(); ++v)
      copy.set_objective(v, Rat(rng.uniform(-6, 6)));
    LpResult r = lp_maximize(copy);
    if (!r.feasible || r.unbounded) fail(Errc::BadIndex, "system polytope degenerate");
    return r.x;
  };
  std::vector<Rat> v1 = vertex(), v2 = vertex();
  std::vector<RationalMeasure> family;
  for (int a = 0; a < k; ++a) {
    RationalMeasure m{support, std::vector<Rat>(n, 0)};
    for (int y = 0; y < n; ++y) m.mass[y] = (v1[a * n + y] + v2[a * n + y]) / 2;
    family.push_back(std::move(m));
  }
  return make_system(index, support, std::move(family));
}

/// Chain index {a < d} over fresh abstract labels.
inline Poset chain_index() {
  return Poset::from_cover_edges({"a", "d"}, {{"a", "d"}});
}

/// Marginal exactness of a transform family against its system.
inline bool transforms_realize(const std::vector<InverseTransform>& xs,
                               const MeasureSystem& s) {
  for (int a = 0; a < s.index.size(); ++a)
    for (int y = 0; y < s.support.size(); ++y)
      if (xs[a].length_where(y) != s.family[a].mass[y]) return false;
  return true;
}

/// Pointwise monotonicity of a transform family along the index order.
inline bool transforms_monotone(const std::vector<InverseTransform>& xs,
                                const Poset& index) {
  for (int a = 0; a < index.size(); ++a)
    for (int b = 0; b < index.size(); ++b)
      if (a != b && index.leq(a, b) && !pointwise_leq(xs[a], xs[b])) return false;
  return true;
}

}  // namespace testing_oracles
