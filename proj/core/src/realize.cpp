#include "monoteq/realize.hpp"

#include <map>

#include "monoteq/classify.hpp"
#include "monoteq/error.hpp"
#include "monoteq/lp.hpp"

namespace monoteq {

Rat MapDistribution::total() const {
  Rat t = 0;
  for (const Rat& w : weight) t += w;
  return t;
}

RationalMeasure MapDistribution::marginal(int alpha) const {
  RationalMeasure m{support, std::vector<Rat>(support.size(), 0)};
  for (size_t i = 0; i < maps.size(); ++i) m.mass[maps[i].assignment[alpha]] += weight[i];
  return m;
}

bool MapDistribution::realizes(const MeasureSystem& s) const {
  if (!index.same_order_as(s.index) || !support.same_order_as(s.support)) return false;
  for (int a = 0; a < index.size(); ++a)
    if (marginal(a).mass != s.family[a].mass) return false;
  return true;
}

RationalMeasure PairCoupling::first_marginal() const {
  RationalMeasure m{support, std::vector<Rat>(support.size(), 0)};
  for (int x = 0; x < support.size(); ++x)
    for (int y = 0; y < support.size(); ++y) m.mass[x] += weight[x][y];
  return m;
}

RationalMeasure PairCoupling::second_marginal() const {
  RationalMeasure m{support, std::vector<Rat>(support.size(), 0)};
  for (int x = 0; x < support.size(); ++x)
    for (int y = 0; y < support.size(); ++y) m.mass[y] += weight[x][y];
  return m;
}

namespace {

MapDistribution from_weights(Poset index, Poset support, std::vector<MonotoneMap> maps,
                             const std::vector<Rat>& w) {
  MapDistribution d{std::move(index), std::move(support), {}, {}};
  for (size_t i = 0; i < maps.size(); ++i)
    if (w[i] > 0) {
      d.maps.push_back(std::move(maps[i]));
      d.weight.push_back(w[i]);
    }
  return d;
}

}  // namespace

std::optional<MapDistribution> is_realizably_monotone(const MeasureSystem& s,
                                                      unsigned long bound) {
  auto maps = monotone_maps(s.index, s.support, bound);
  LinearProgram lp;
  for (size_t i = 0; i < maps.size(); ++i) lp.add_var(true);
  for (int a = 0; a < s.index.size(); ++a)
    for (int x = 0; x < s.support.size(); ++x) {
      std::vector<std::pair<int, Rat>> terms;
      for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].assignment[a] == x) terms.emplace_back(static_cast<int>(i), 1);
      lp.add_row(terms, LinearProgram::Rel::Eq, s.family[a].at(x));
    }
  auto sol = lp_feasible(lp);
  if (!sol) return std::nullopt;
  return from_weights(s.index, s.support, std::move(maps), *sol);
}

Rat max_theta(const MeasureSystem& s, unsigned long bound) {
  auto maps = monotone_maps(s.index, s.support, bound);
  LinearProgram lp;
  for (size_t i = 0; i < maps.size(); ++i) lp.add_var(true);
  int theta = lp.add_var(true);
  lp.set_objective(theta, 1);
  lp.add_row({{theta, 1}}, LinearProgram::Rel::Le, 1);
  for (int a = 0; a < s.index.size(); ++a) {
    int ia = s.support.index_of(s.index.name(a));
    for (int x = 0; x < s.support.size(); ++x) {
      std::vector<std::pair<int, Rat>> terms;
      for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].assignment[a] == x) terms.emplace_back(static_cast<int>(i), 1);
      Rat unit = x == ia ? 1 : 0;
      terms.emplace_back(theta, unit - s.family[a].at(x));
      lp.add_row(terms, LinearProgram::Rel::Eq, unit);
    }
  }
  LpResult res = lp_maximize(lp);
  // theta = 0 with the identity embedding is always feasible.
  if (!res.feasible || res.unbounded)
    fail(Errc::MassMismatch, "weak-monotonicity program unexpectedly degenerate");
  return res.objective;
}

std::optional<PairCoupling> strassen_lp(const RationalMeasure& p1,
                                        const RationalMeasure& p2) {
  if (!p1.support.same_order_as(p2.support))
    fail(Errc::SupportMismatch, "coupling needs a common support");
  if (p1.total() != p2.total())
    fail(Errc::MassMismatch, "coupling needs equal totals");
  const Poset& s = p1.support;
  int n = s.size();
  LinearProgram lp;
  std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.leq(x, y)) var[x][y] = lp.add_var(true);
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<int, Rat>> terms;
    for (int y = 0; y < n; ++y)
      if (var[x][y] >= 0) terms.emplace_back(var[x][y], 1);
    lp.add_row(terms, LinearProgram::Rel::Eq, p1.at(x));
  }
  for (int y = 0; y < n; ++y) {
    std::vector<std::pair<int, Rat>> terms;
    for (int x = 0; x < n; ++x)
      if (var[x][y] >= 0) terms.emplace_back(var[x][y], 1);
    lp.add_row(terms, LinearProgram::Rel::Eq, p2.at(y));
  }
  auto sol = lp_feasible(lp);
  if (!sol) return std::nullopt;
  PairCoupling c{s, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, 0))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (var[x][y] >= 0) c.weight[x][y] = (*sol)[var[x][y]];
  return c;
}

MapDistribution realize_acyclic(const MeasureSystem& s) {
  const Poset& a = s.index;
  if (!is_acyclic(a))
    fail(Errc::NotAcyclic, "index poset must have a connected tree Hasse diagram");
  if (!system_is_stoch_monotone(s))
    fail(Errc::NotStochasticallyMonotone, "system is not stochastically monotone");
  int root = 0;
  while (!((a.maximal_elements() >> root) & 1)) ++root;
  RootedTree rt(a, root);

  // Partial maps keyed by assignment vectors (-1 = not yet assigned).
  std::map<std::vector<int>, Rat> laws;
  std::vector<int> init(a.size(), -1);
  for (int x = 0; x < s.support.size(); ++x)
    if (s.family[root].at(x) > 0) {
      init[root] = x;
      laws[init] = s.family[root].at(x);
    }

  // BFS order guarantees the parent is assigned before its child.
  std::vector<int> order{root};
  for (size_t q = 0; q < order.size(); ++q)
    for (int c : rt.children(order[q])) order.push_back(c);
  for (size_t q = 1; q < order.size(); ++q) {
    int child = order[q], par = rt.parent(child);
    bool up = a.leq(par, child);  // tree edges are cover pairs, so comparable
    auto coupling = up ? strassen_lp(s.family[par], s.family[child])
                       : strassen_lp(s.family[child], s.family[par]);
    if (!coupling)
      fail(Errc::NotStochasticallyMonotone, "edge coupling infeasible");
    const RationalMeasure& pp = s.family[par];
    std::map<std::vector<int>, Rat> next;
    for (auto& [h, w] : laws) {
      int sv = h[par];
      for (int t = 0; t < s.support.size(); ++t) {
        Rat joint = up ? coupling->weight[sv][t] : coupling->weight[t][sv];
        if (joint == 0) continue;
        std::vector<int> h2 = h;
        h2[child] = t;
        next[h2] += w * joint / pp.at(sv);
      }
    }
    laws = std::move(next);
  }
  MapDistribution d{a, s.support, {}, {}};
  for (auto& [h, w] : laws) {
    d.maps.push_back({h});
    d.weight.push_back(w);
  }
  return d;
}

MapDistribution glue_realizations(const MapDistribution& d1, const MapDistribution& d2,
                                  const std::string& shared) {
  if (!d1.support.same_order_as(d2.support))
    fail(Errc::SupportMismatch, "glued realizations need a common support");
  Poset index = glue(d1.index, d2.index, shared);  // BadIntersection if sets overlap
  int a1 = d1.index.index_of(shared), a2 = d2.index.index_of(shared);
  RationalMeasure m1 = d1.marginal(a1), m2 = d2.marginal(a2);
  if (m1.mass != m2.mass)
    fail(Errc::MarginalMismatch, "shared-index marginals disagree");

  MapDistribution d{index, d1.support, {}, {}};
  for (size_t i = 0; i < d1.maps.size(); ++i) {
    int v = d1.maps[i].assignment[a1];
    for (size_t j = 0; j < d2.maps.size(); ++j) {
      if (d2.maps[j].assignment[a2] != v) continue;
      std::vector<int> h(index.size());
      for (int k = 0; k < d1.index.size(); ++k)
        h[index.index_of(d1.index.name(k))] = d1.maps[i].assignment[k];
      for (int k = 0; k < d2.index.size(); ++k)
        h[index.index_of(d2.index.name(k))] = d2.maps[j].assignment[k];
      d.maps.push_back({h});
      d.weight.push_back(d1.weight[i] * d2.weight[j] / m1.at(v));
    }
  }
  return d;
}

}  // namespace monoteq
