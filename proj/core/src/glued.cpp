#include "monoteq/glued.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "monoteq/error.hpp"
#include "monoteq/lp.hpp"
#include "monoteq/patterns.hpp"

namespace monoteq {

namespace {

Mask bit(int i) { return Mask{1} << i; }

RationalMeasure zero_measure(const Poset& p) {
  return {p, std::vector<Rat>(p.size(), 0)};
}

/// Common total of all members; MassMismatch if they disagree.
Rat common_total(const MeasureSystem& s) {
  Rat t = s.family.empty() ? Rat(0) : s.family[0].total();
  for (const RationalMeasure& m : s.family)
    if (m.total() != t) fail(Errc::MassMismatch, "system members must share one total mass");
  return t;
}

/// Mass of `m` carried onto `to` by element name; mass at elements
/// absent from `to` is dropped (deliberate truncation).
RationalMeasure truncate_measure(const RationalMeasure& m, const Poset& to) {
  RationalMeasure out = zero_measure(to);
  for (int y = 0; y < to.size(); ++y) {
    int src = m.support.find(to.name(y));
    if (src >= 0) out.mass[y] = m.mass[src];
  }
  return out;
}

/// The midpoint row: a measure on one half of the extension,
/// stochastically between the rows of the bipartite's two sides, found
/// by linear feasibility (the host's structure guarantees existence).
RationalMeasure solve_midpoint(const MeasureSystem& s, const Poset& half,
                               Mask below, Mask above, const Rat& total,
                               const std::string& c_name) {
  int c = half.index_of(c_name);
  auto half_row = [&](int x) {
    RationalMeasure r = zero_measure(half);
    Rat rest = total;
    for (int y = 0; y < half.size(); ++y) {
      if (y == c) continue;
      int src = s.support.find(half.name(y));
      if (src >= 0) {
        r.mass[y] = s.family[x].mass[src];
        rest -= r.mass[y];
      }
    }
    r.mass[c] = rest;
    return r;
  };
  LinearProgram lp;
  for (int y = 0; y < half.size(); ++y) lp.add_var(true);
  {
    std::vector<std::pair<int, Rat>> all;
    for (int y = 0; y < half.size(); ++y) all.emplace_back(y, 1);
    lp.add_row(all, LinearProgram::Rel::Eq, total);
  }
  std::vector<Mask> ups = half.up_sets();
  for (int x = 0; x < s.support.size(); ++x) {
    bool lo = (below >> x) & 1, hi = (above >> x) & 1;
    if (!lo && !hi) continue;
    RationalMeasure row = half_row(x);
    for (Mask u : ups) {
      std::vector<std::pair<int, Rat>> terms;
      for (int y = 0; y < half.size(); ++y)
        if ((u >> y) & 1) terms.emplace_back(y, 1);
      lp.add_row(terms, lo ? LinearProgram::Rel::Ge : LinearProgram::Rel::Le,
                 row.mass_of(u));
    }
  }
  auto sol = lp_feasible(lp);
  if (!sol)
    fail(Errc::MidpointInfeasible, "no stochastic midpoint for the bipartite sides");
  RationalMeasure out = zero_measure(half);
  for (int y = 0; y < half.size(); ++y) out.mass[y] = (*sol)[y];
  return out;
}

}  // namespace

BipartiteExtension extend_bipartite(const MeasureSystem& s) {
  const Poset& p = s.support;
  if (!p.same_order_as(s.index))
    fail(Errc::SupportMismatch, "a full-kernel system is required");
  auto ev = y_glued_bipartite_evidence(p);
  if (!ev) fail(Errc::NotYGluedBipartite, "support poset is not Y-glued bipartite");
  if (!system_is_stoch_monotone(s))
    fail(Errc::NotStochasticallyMonotone, "system is not stochastically monotone");
  Rat t = common_total(s);
  ExtSplit split = algorithm_ext(p, *ev);
  RationalMeasure qc1 =
      solve_midpoint(s, split.s1, ev->lower, ev->upper, t, split.c_name);
  RationalMeasure qc2 =
      solve_midpoint(s, split.s2, ev->lower, ev->upper, t, split.c_name);
  int c1 = split.s1.index_of(split.c_name), c2 = split.s2.index_of(split.c_name);
  Rat pc = (t - qc1.mass[c1]) + (t - qc2.mass[c2]);
  Rat theta = pc > t ? t / pc : Rat(1);

  const Poset& hat = split.s_hat;
  int c = hat.index_of(split.c_name);
  std::vector<RationalMeasure> family;
  for (int x = 0; x < hat.size(); ++x) {
    RationalMeasure m = zero_measure(hat);
    if (x == c) {
      for (int y = 0; y < hat.size(); ++y) {
        if (y == c) continue;
        int y1 = split.s1.find(hat.name(y)), y2 = split.s2.find(hat.name(y));
        if (y1 >= 0) m.mass[y] += theta * qc1.mass[y1];
        if (y2 >= 0) m.mass[y] += theta * qc2.mass[y2];
      }
      m.mass[c] = t - theta * pc;
    } else {
      int src = p.index_of(hat.name(x));
      for (int y = 0; y < hat.size(); ++y) {
        if (y == c) continue;
        m.mass[y] = theta * s.family[src].mass[p.index_of(hat.name(y))];
      }
      m.mass[x] += (1 - theta) * t;
    }
    family.push_back(std::move(m));
  }
  MeasureSystem ext = make_system(hat, hat, std::move(family));
  if (!system_is_stoch_monotone(ext))
    fail(Errc::MidpointInfeasible, "extended system failed the monotonicity re-check");
  return {std::move(theta), std::move(split), std::move(ext)};
}

YGluedRealization y_glued_realize(const MeasureSystem& s) {
  BipartiteExtension ext = extend_bipartite(s);
  MapDistribution hat_law = realize_acyclic(ext.extended);
  const Poset& orig = s.support;
  const Poset& hat = ext.split.s_hat;
  int c = hat.index_of(ext.split.c_name);
  std::map<std::vector<int>, Rat> law;
  for (size_t i = 0; i < hat_law.maps.size(); ++i) {
    std::vector<int> h(orig.size());
    for (int k = 0; k < orig.size(); ++k) {
      int v = hat_law.maps[i].assignment[hat.index_of(orig.name(k))];
      if (v == c)
        fail(Errc::MarginalMismatch, "positive mass escaped to the midpoint");
      h[k] = orig.index_of(hat.name(v));
    }
    law[h] += hat_law.weight[i];
  }
  MapDistribution d{orig, orig, {}, {}};
  for (auto& [h, w] : law) {
    d.maps.push_back({h});
    d.weight.push_back(w);
  }
  return {ext.theta, std::move(d)};
}

namespace {

/// The replacement data of one glued side: the gamma scalars and the
/// reassignment segments (in node-local coordinates) for the minimum
/// index and for the other middle index of the diamond.
struct SideMod {
  Rat gamma_lo, gamma_mid;
  std::vector<std::pair<Rat, Rat>> repl_lo, repl_mid;
};

SideMod side_replacements(const PlaneTree& k, const InterlacedDistribution& mu,
                          int node, const DistributionFunction& f_lo,
                          const DistributionFunction& f_mid, const Rat& q_lo,
                          const Rat& q_mid) {
  int v = k.u_star(node);
  Rat mum = mu.minus(k, node);
  // Glue-valued capacity of each row on the root path and on the top slice
  // of each child interval; interlacing makes every capacity nonnegative.
  Rat root_lo = f_lo.f[v] - mum;
  Rat root_mid = f_mid.f[v] - mum;
  const std::vector<int>& children = k.node(node).children;
  int m = static_cast<int>(children.size());
  std::vector<Rat> cap_lo(m), cap_mid(m), t_lo(m, Rat(0)), t_mid(m, Rat(0));
  for (int j = 0; j < m; ++j) {
    cap_lo[j] = mu.mu[children[j]] - f_lo.f[k.u1(children[j])];
    cap_mid[j] = mu.mu[children[j]] - f_mid.f[k.u1(children[j])];
  }
  // Place the bottom row's fold mass so that as much of it as possible is
  // usable by the other middle row, whose pieces must nest inside the
  // bottom row's: shared child capacity first, then the root path, then
  // whatever child capacity only the bottom row has.
  Rat rest = q_lo;
  for (int j = 0; j < m && rest > 0; ++j) {
    Rat take = std::min(rest, std::min(cap_lo[j], cap_mid[j]));
    t_lo[j] = take;
    rest -= take;
  }
  Rat r_lo = std::min(rest, root_lo);
  rest -= r_lo;
  for (int j = 0; j < m && rest > 0; ++j) {
    Rat take = std::min(Rat(rest), Rat(cap_lo[j] - t_lo[j]));
    t_lo[j] += take;
    rest -= take;
  }
  if (rest != 0)
    fail(Errc::HypothesisViolated, "fold mass exceeds the bottom row's glue capacity");
  rest = q_mid;
  for (int j = 0; j < m && rest > 0; ++j) {
    Rat take = std::min(rest, std::min(t_lo[j], cap_mid[j]));
    t_mid[j] = take;
    rest -= take;
  }
  Rat r_mid = std::min(rest, std::min(r_lo, root_mid));
  rest -= r_mid;
  if (rest != 0)
    fail(Errc::HypothesisViolated, "replacement intervals fail to nest");
  SideMod sm{q_lo - r_lo, q_mid - r_mid, {}, {}};
  auto piece = [](std::vector<std::pair<Rat, Rat>>& out, const Rat& lo, const Rat& hi) {
    if (lo < hi) out.emplace_back(lo, hi);
  };
  piece(sm.repl_lo, mum, mum + r_lo);
  piece(sm.repl_mid, mum, mum + r_mid);
  Rat off = 0;
  for (int j = 0; j < m; ++j) {
    const Rat& ms = mu.mu[children[j]];
    piece(sm.repl_lo, off + ms - t_lo[j], off + ms);
    piece(sm.repl_mid, off + ms - t_mid[j], off + ms);
    off += ms;
  }
  return sm;
}

/// Positions inside a diamond-shaped index poset: minimum, the middle
/// whose name appears in `support`, the other middle, maximum.
struct MiddleSplit {
  int lo, in, out, hi;  // index-poset positions
};

MiddleSplit identify_diamond_index(const Poset& index, const Poset& support) {
  if (!is_isomorphic(index, patterns::diamond()))
    fail(Errc::HypothesisViolated, "a diamond index poset is required");
  MiddleSplit di{-1, -1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    if (popcount(index.down_of(i)) == 1)
      di.lo = i;
    else if (popcount(index.up_of(i)) == 1)
      di.hi = i;
    else if (support.find(index.name(i)) >= 0 && di.in < 0)
      di.in = i;
    else
      di.out = i;
  }
  if (di.in < 0 || support.find(index.name(di.out)) >= 0)
    fail(Errc::HypothesisViolated,
         "exactly one middle index element may belong to the support");
  return di;
}

/// Diamond corner positions (bottom, b, c, top) in a diamond index poset
/// whose element names match the structure's corners in the support.
std::array<int, 4> diamond_positions(const Poset& index, const Poset& support,
                                     const WGluedStructure& ws) {
  std::array<int, 4> pos{index.find(support.name(ws.a)), index.find(support.name(ws.b)),
                         index.find(support.name(ws.c)), index.find(support.name(ws.d))};
  if (index.size() != 4 || pos[0] < 0 || pos[1] < 0 || pos[2] < 0 || pos[3] < 0)
    fail(Errc::HypothesisViolated, "index poset must name the diamond's corners");
  return pos;
}

/// All the data one glued side produces: the plane tree on the support
/// minus the fold vertex (dualized when the component hangs below the
/// glue vertex), the shared interlaced distribution, the plain
/// transforms, and the transforms with part of the glue vertex's
/// preimage reassigned to the fold vertex.
struct SideCore {
  PlaneTree plane;
  InterlacedDistribution mu;
  std::vector<InverseTransform> base;  // by row, values in the tree
  std::vector<InverseTransform> xs;    // by row, values in the side poset
  std::vector<Rat> gamma;              // by row
  std::vector<std::vector<std::pair<Rat, Rat>>> replaced;  // by row
};

/// Realizes a family of equal-mass measures on a Y-class side poset
/// (the chain a < b < d with a tree component glued at b) by recursive
/// inverse transforms that are jointly monotone whenever rows `lo` and
/// `hi` bracket the family stochastically. Mass at the fold vertex a may
/// only appear in rows `lo` and `mid_out`; it is folded into b, realized
/// on the tree without a, and reassigned back on nested segments. A
/// component hanging below b is handled on the dual poset with the roles
/// of a and d (and of lo and hi) swapped.
SideCore realize_y_side(const Poset& yp, const std::vector<RationalMeasure>& rows,
                        int lo, int hi, int mid_out, int a_y, int b_y, int d_y) {
  int n = static_cast<int>(rows.size());
  Mask wbm = yp.all() & ~bit(a_y) & ~bit(d_y);
  Mask below = yp.down_of(b_y) & wbm & ~bit(b_y);
  Mask above = yp.up_of(b_y) & wbm & ~bit(b_y);
  if (below != 0 && above != 0)
    fail(Errc::HypothesisViolated, "glue vertex must be extreme in its component");
  if (below != 0) {
    Poset yd = yp.dual();
    std::vector<RationalMeasure> dual_rows;
    for (const RationalMeasure& r : rows) dual_rows.push_back({yd, r.mass});
    SideCore core = realize_y_side(yd, dual_rows, hi, lo, mid_out, d_y, b_y, a_y);
    // dual() keeps the element order, so only the support flips back
    for (InverseTransform& x : core.xs) x.support = yp;
    return core;
  }
  for (int i = 0; i < n; ++i)
    if (i != lo && i != mid_out && rows[i].mass[a_y] != 0)
      fail(Errc::HypothesisViolated,
           "only the bottom and off-side rows may charge the fold vertex");

  Poset what = yp.induced(yp.all() & ~bit(a_y));
  int b_w = what.index_of(yp.name(b_y));
  std::vector<RationalMeasure> reduced;
  for (const RationalMeasure& r : rows) {
    RationalMeasure m = truncate_measure(r, what);
    m.mass[b_w] += r.mass[a_y];
    reduced.push_back(std::move(m));
  }
  RootedTree rt(what, yp.name(d_y));
  PlaneTree plane(std::move(rt), bit(b_w));
  std::vector<DistributionFunction> f;
  for (const RationalMeasure& m : reduced)
    f.push_back(distribution_function(m, plane.tree()));
  InterlacedDistribution mu = interlaced_mu(f[lo], f[hi], plane, false);
  int node = plane.node_of(b_w);
  if (plane.u_star(node) != b_w || node != plane.root())
    fail(Errc::HypothesisViolated, "glue vertex must end the root path");

  SideCore core{plane, mu, {}, {}, std::vector<Rat>(n, 0), {}};
  core.replaced.resize(n);
  for (int i = 0; i < n; ++i) core.base.push_back(build_rit(plane, mu, f[i].f));
  const DistributionFunction& f_mid = mid_out >= 0 ? f[mid_out] : f[hi];
  Rat q_mid = mid_out >= 0 ? rows[mid_out].mass[a_y] : Rat(0);
  SideMod sm =
      side_replacements(plane, mu, node, f[lo], f_mid, rows[lo].mass[a_y], q_mid);
  core.gamma[lo] = sm.gamma_lo;
  core.replaced[lo] = sm.repl_lo;
  if (mid_out >= 0) {
    core.gamma[mid_out] = sm.gamma_mid;
    core.replaced[mid_out] = sm.repl_mid;
  }
  for (int i = 0; i < n; ++i) {
    InverseTransform x = core.base[i].relabeled(yp);
    x.replace(core.replaced[i], b_y, a_y);
    core.xs.push_back(std::move(x));
  }
  for (int i = 0; i < n; ++i)
    for (int y = 0; y < yp.size(); ++y)
      if (core.xs[i].length_where(y) != rows[i].mass[y])
        fail(Errc::MarginalMismatch, "side transforms missed the target marginals");
  return core;
}

}  // namespace

ModifiedTransforms modified_rit_y(const MeasureSystem& qt) {
  const Poset& yp = qt.support;
  MiddleSplit di = identify_diamond_index(qt.index, yp);
  int a_y = yp.find(qt.index.name(di.lo));
  int b_y = yp.find(qt.index.name(di.in));
  int d_y = yp.find(qt.index.name(di.hi));
  if (a_y < 0 || d_y < 0)
    fail(Errc::HypothesisViolated, "support must contain the index extremes");
  common_total(qt);
  if (!system_is_stoch_monotone(qt))
    fail(Errc::HypothesisViolated, "input system is not stochastically monotone");
  SideCore core = realize_y_side(yp, qt.family, di.lo, di.hi, di.out, a_y, b_y, d_y);
  return {std::move(core.plane), std::move(core.mu),   std::move(core.base),
          std::move(core.xs),    std::move(core.gamma), std::move(core.replaced)};
}

namespace {

/// The two side systems of the split (rows ordered by index position),
/// plus the side subposets and totals.
struct SplitSides {
  Poset y1, y2;                         // induced side subposets
  std::vector<RationalMeasure> q1, q2;  // by index position
  Rat qp, qpp;                          // side totals
};

SplitSides build_split_sides(const MeasureSystem& ps, const WGluedStructure& ws,
                             const std::array<int, 4>& pos) {
  const Poset& st = ps.support;
  Mask y1m = ws.comp_b | bit(ws.a) | bit(ws.d);
  Mask y2m = ws.comp_c | bit(ws.a) | bit(ws.d);
  SplitSides out{st.induced(y1m), st.induced(y2m), {}, {}, 0, 0};
  out.qp = ps.family[pos[2]].mass_of(y1m);  // the off-side middle's mass
  out.qpp = ps.family[pos[1]].mass_of(y2m);
  auto side = [&](const Poset& yp, Mask comp, int glue, const Rat& total,
                  int pos_in, int pos_out) {
    int a_y = yp.index_of(st.name(ws.a));
    int d_y = yp.index_of(st.name(ws.d));
    int g_y = yp.index_of(st.name(glue));
    std::vector<RationalMeasure> rows(4, zero_measure(yp));
    // bottom row: remainder at the bottom corner, own mass on the
    // component, nothing at the top
    RationalMeasure bot = truncate_measure(ps.family[pos[0]], yp);
    bot.mass[a_y] = total - ps.family[pos[0]].mass_of(comp);
    bot.mass[d_y] = 0;
    // glued middle: remainder at the glue vertex, nothing at the corners
    RationalMeasure mid_in = truncate_measure(ps.family[pos_in], yp);
    mid_in.mass[a_y] = 0;
    mid_in.mass[d_y] = 0;
    mid_in.mass[g_y] =
        total - (ps.family[pos_in].mass_of(comp) - ps.family[pos_in].mass[glue]);
    // off-side middle: plain truncation (its side mass is the total)
    RationalMeasure mid_out = truncate_measure(ps.family[pos_out], yp);
    // top row: nothing at the bottom corner, remainder at the top
    RationalMeasure top = truncate_measure(ps.family[pos[3]], yp);
    top.mass[a_y] = 0;
    top.mass[d_y] = total - ps.family[pos[3]].mass_of(comp);
    rows[pos[0]] = std::move(bot);
    rows[pos_in] = std::move(mid_in);
    rows[pos_out] = std::move(mid_out);
    rows[pos[3]] = std::move(top);
    for (const RationalMeasure& r : rows)
      for (const Rat& v : r.mass)
        if (v < 0) fail(Errc::HypothesisViolated, "side decomposition turned negative");
    return rows;
  };
  out.q1 = side(out.y1, ws.comp_b, ws.b, out.qp, pos[1], pos[2]);
  out.q2 = side(out.y2, ws.comp_c, ws.c, out.qpp, pos[2], pos[1]);
  return out;
}

}  // namespace

DiamondDecomposition w_glued_split(const MeasureSystem& ps) {
  const Poset& st = ps.support;
  auto ws = w_glued_structure(st);
  if (!ws) fail(Errc::HypothesisViolated, "support is not a W-glued diamond");
  if (popcount(ws->comp_a) != 1 || popcount(ws->comp_d) != 1)
    fail(Errc::HypothesisViolated, "tails are only allowed at the middle corners");
  std::array<int, 4> pos = diamond_positions(ps.index, st, *ws);
  if (!system_is_stoch_monotone(ps))
    fail(Errc::NotStochasticallyMonotone, "system is not stochastically monotone");
  Rat p = common_total(ps);
  if (ps.family[pos[0]].mass[ws->d] != 0 || ps.family[pos[3]].mass[ws->a] != 0)
    fail(Errc::HypothesisViolated, "bottom and top rows must not charge each other");

  SplitSides sides = build_split_sides(ps, *ws, pos);
  Rat q_tilde = sides.qp + sides.qpp;
  Rat theta = std::max(Rat(p - q_tilde), Rat(0));
  Rat theta_star = std::max(Rat(q_tilde - p), Rat(0));

  // The split identity on the full support, element by element.
  for (int i = 0; i < 4; ++i) {
    int self = st.index_of(ps.index.name(i));
    for (int y = 0; y < st.size(); ++y) {
      Rat lhs = theta * (y == self ? 1 : 0);
      int y1 = sides.y1.find(st.name(y)), y2 = sides.y2.find(st.name(y));
      if (y1 >= 0) lhs += sides.q1[i].mass[y1];
      if (y2 >= 0) lhs += sides.q2[i].mass[y2];
      Rat rhs = ps.family[i].mass[y] + theta_star * (y == self ? 1 : 0);
      if (lhs != rhs)
        fail(Errc::MassMismatch, "split identity failed; input outside the hypotheses");
    }
  }

  // Realize each side on its own Y-class subposet, then lay the side
  // transforms end to end with the common tail segment on top. On the b
  // side the bottom and the c-index rows give mass back to the bottom
  // corner; on the c side the bottom and the b-index rows do.
  SideCore side_b = realize_y_side(
      sides.y1, sides.q1, pos[0], pos[3], pos[2], sides.y1.index_of(st.name(ws->a)),
      sides.y1.index_of(st.name(ws->b)), sides.y1.index_of(st.name(ws->d)));
  SideCore side_c = realize_y_side(
      sides.y2, sides.q2, pos[0], pos[3], pos[1], sides.y2.index_of(st.name(ws->a)),
      sides.y2.index_of(st.name(ws->c)), sides.y2.index_of(st.name(ws->d)));
  std::vector<InverseTransform> xs;
  for (int i = 0; i < 4; ++i) {
    InverseTransform x{st, {}};
    for (const Interval& part : side_b.xs[i].relabeled(st).parts) x.parts.push_back(part);
    for (Interval part : side_c.xs[i].relabeled(st).parts) {
      part.lo += sides.qp;
      part.hi += sides.qp;
      x.parts.push_back(std::move(part));
    }
    // The common tail becomes the index element itself.
    if (theta > 0)
      x.parts.push_back({q_tilde, q_tilde + theta, st.index_of(ps.index.name(i))});
    x.normalize();
    xs.push_back(std::move(x));
  }
  for (int i = 0; i < 4; ++i) {
    int self = st.index_of(ps.index.name(i));
    for (int y = 0; y < st.size(); ++y) {
      Rat want = ps.family[i].mass[y] + theta_star * (y == self ? 1 : 0);
      if (xs[i].length_where(y) != want)
        fail(Errc::MarginalMismatch, "combined transforms missed the target marginals");
    }
  }

  return {*ws,
          make_system(ps.index, sides.y1, std::move(sides.q1)),
          make_system(ps.index, sides.y2, std::move(sides.q2)),
          p,
          sides.qp,
          sides.qpp,
          std::move(q_tilde),
          std::move(theta),
          std::move(theta_star),
          std::move(xs)};
}

WGluedRealization w_glued_realize(const MeasureSystem& p_sys) {
  const Poset& sp = p_sys.support;
  if (!sp.same_order_as(p_sys.index))
    fail(Errc::SupportMismatch, "a full-kernel system is required");
  auto wso = w_glued_structure(sp);
  if (!wso) fail(Errc::NotWGluedDiamond, "support poset is not a W-glued diamond");
  WGluedStructure wsv = *wso;
  if (!system_is_stoch_monotone(p_sys))
    fail(Errc::NotStochasticallyMonotone, "system is not stochastically monotone");
  Rat p = common_total(p_sys);

  std::vector<std::string> corners{sp.name(wsv.a), sp.name(wsv.b), sp.name(wsv.c),
                                   sp.name(wsv.d)};
  std::sort(corners.begin(), corners.end());
  Poset diamond_index = sp.induced(corners);

  // The outer system on the bottom and top components.
  Mask wpm = wsv.comp_a | wsv.comp_d;
  Poset wp = sp.induced(wpm);
  Mask wa_open = wsv.comp_a & ~bit(wsv.a), wd_open = wsv.comp_d & ~bit(wsv.d);
  const RationalMeasure& row_a = p_sys.family[wsv.a];
  const RationalMeasure& row_d = p_sys.family[wsv.d];
  auto outer_row = [&](int alpha) {
    RationalMeasure m = truncate_measure(p_sys.family[alpha], wp);
    Rat at_a = row_d.mass_of(wsv.comp_a) - p_sys.family[alpha].mass_of(wa_open);
    Rat at_d = row_a.mass_of(wsv.comp_d) - p_sys.family[alpha].mass_of(wd_open);
    if (at_a < 0 || at_d < 0)
      fail(Errc::HypothesisViolated, "outer decomposition turned negative");
    m.mass[wp.index_of(sp.name(wsv.a))] = std::move(at_a);
    m.mass[wp.index_of(sp.name(wsv.d))] = std::move(at_d);
    return m;
  };

  // The inner system on the two-sided glued diamond.
  Mask stm = wsv.comp_b | wsv.comp_c | bit(wsv.a) | bit(wsv.d);
  Poset st = sp.induced(stm);
  std::array<int, 4> pos = diamond_positions(diamond_index, sp, wsv);
  std::array<int, 4> corner_at{};  // index position -> corner element in sp
  for (int j = 0; j < 4; ++j) {
    std::array<int, 4> corner{wsv.a, wsv.b, wsv.c, wsv.d};
    corner_at[static_cast<size_t>(pos[j])] = corner[j];
  }
  std::vector<RationalMeasure> inner_rows;
  for (int i = 0; i < 4; ++i) {
    int alpha = corner_at[i];
    RationalMeasure m = truncate_measure(p_sys.family[alpha], st);
    RationalMeasure outer = outer_row(alpha);
    m.mass[st.index_of(sp.name(wsv.a))] =
        p_sys.family[alpha].mass[wsv.a] - outer.mass[wp.index_of(sp.name(wsv.a))];
    m.mass[st.index_of(sp.name(wsv.d))] =
        p_sys.family[alpha].mass[wsv.d] - outer.mass[wp.index_of(sp.name(wsv.d))];
    inner_rows.push_back(std::move(m));
  }
  DiamondDecomposition dd =
      w_glued_split(make_system(diamond_index, st, std::move(inner_rows)));
  // The split labels the diamond on its own; reconcile a possible swap of
  // the two middle corners.
  if (st.name(dd.ws.b) != sp.name(wsv.b)) {
    std::swap(wsv.b, wsv.c);
    std::swap(wsv.comp_b, wsv.comp_c);
    pos = diamond_positions(diamond_index, sp, wsv);
    for (int j = 0; j < 4; ++j) {
      std::array<int, 4> corner{wsv.a, wsv.b, wsv.c, wsv.d};
      corner_at[static_cast<size_t>(pos[j])] = corner[j];
    }
  }
  const Rat& theta_star = dd.theta_star;

  // Outer part: the remaining mass on the bottom and top components is
  // realized by plain transforms on their glued tree (the induced poset
  // on those components already has the cover a < d), appended after
  // the split's transforms.
  std::vector<RationalMeasure> outer_rows;
  for (int i = 0; i < 4; ++i) outer_rows.push_back(outer_row(corner_at[i]));
  RootedTree ot(wp, sp.name(wsv.d));
  PlaneTree oplane(std::move(ot));
  std::vector<DistributionFunction> of;
  for (int i = 0; i < 4; ++i)
    of.push_back(distribution_function(outer_rows[i], oplane.tree()));
  InterlacedDistribution omu = interlaced_mu(of[pos[0]], of[pos[3]], oplane, false);
  Rat inner_total = dd.q_tilde + dd.theta;
  std::vector<InverseTransform> xs;
  for (int i = 0; i < 4; ++i) {
    InverseTransform x = dd.transforms[i].relabeled(sp);
    for (Interval part : build_rit(oplane, omu, of[i].f).relabeled(sp).parts) {
      part.lo += inner_total;
      part.hi += inner_total;
      x.parts.push_back(std::move(part));
    }
    x.normalize();
    xs.push_back(std::move(x));
  }
  for (int i = 0; i < 4; ++i) {
    int alpha = corner_at[i];
    for (int y = 0; y < sp.size(); ++y) {
      Rat want = p_sys.family[alpha].mass[y] + theta_star * (y == alpha ? 1 : 0);
      if (xs[i].length_where(y) != want)
        fail(Errc::MarginalMismatch, "diamond transforms missed the target marginals");
    }
  }

  // Full-index law: the diamond law from the transforms, then one
  // acyclic realization per component, glued at the corners.
  Rat theta_weak = p / (p + theta_star);
  MapDistribution law = transforms_to_map_distribution(diamond_index, xs);
  for (Rat& w : law.weight) w *= theta_weak;
  std::array<int, 4> corner{wsv.a, wsv.b, wsv.c, wsv.d};
  std::array<Mask, 4> comps{wsv.comp_a, wsv.comp_b, wsv.comp_c, wsv.comp_d};
  for (int k = 0; k < 4; ++k) {
    if (popcount(comps[k]) == 1) continue;
    Poset cp = sp.induced(comps[k]);
    std::vector<RationalMeasure> fam;
    for (int x = 0; x < cp.size(); ++x) {
      int src = sp.index_of(cp.name(x));
      RationalMeasure m = zero_measure(sp);
      for (int y = 0; y < sp.size(); ++y)
        m.mass[y] = theta_weak * p_sys.family[src].mass[y];
      m.mass[src] += (1 - theta_weak) * p;
      fam.push_back(std::move(m));
    }
    MapDistribution part = realize_acyclic(make_system(cp, sp, std::move(fam)));
    law = glue_realizations(law, part, sp.name(corner[k]));
  }
  if (!law.index.same_order_as(sp))
    fail(Errc::HypothesisViolated, "glued index failed to rebuild the host poset");
  law.index = sp;
  return {wsv,           theta_star, theta_weak, std::move(xs),
          std::move(diamond_index), std::move(law)};
}

std::pair<InverseTransform, InverseTransform> strassen_w_glued(
    const RationalMeasure& p1, const RationalMeasure& p2) {
  const Poset& sp = p1.support;
  if (!sp.same_order_as(p2.support))
    fail(Errc::SupportMismatch, "a common support poset is required");
  auto ws = w_glued_structure(sp);
  if (!ws) fail(Errc::NotWGluedDiamond, "support poset is not a W-glued diamond");
  if (p1.total() != p2.total())
    fail(Errc::MassMismatch, "ordered coupling needs equal totals");
  if (!stoch_leq(p1, p2))
    fail(Errc::NotOrdered, "measures are not stochastically ordered");
  Rat p = p1.total();
  Rat qp = std::max(Rat(p1.mass_of(ws->comp_b)), Rat(p2.mass_of(ws->comp_b)));
  Rat qpp = std::max(Rat(p1.mass_of(ws->comp_c)), Rat(p2.mass_of(ws->comp_c)));

  // One glued side as a two-row system of mass q_side: the lower row
  // borrows its deficit at the bottom corner, the upper row parks its
  // deficit at the top corner.
  auto side_pair = [&](Mask comp, int glue_v, const Rat& q_side) {
    Poset yp = sp.induced(comp | bit(ws->a) | bit(ws->d));
    int a_y = yp.index_of(sp.name(ws->a));
    int g_y = yp.index_of(sp.name(glue_v));
    int d_y = yp.index_of(sp.name(ws->d));
    RationalMeasure r1 = truncate_measure(p1, yp);
    r1.mass[a_y] = q_side - p1.mass_of(comp);
    r1.mass[d_y] = 0;
    RationalMeasure r2 = truncate_measure(p2, yp);
    r2.mass[a_y] = 0;
    r2.mass[d_y] = q_side - p2.mass_of(comp);
    SideCore core = realize_y_side(yp, {r1, r2}, 0, 1, -1, a_y, g_y, d_y);
    return std::pair(core.xs[0].relabeled(sp), core.xs[1].relabeled(sp));
  };
  auto [xb1, xb2] = side_pair(ws->comp_b, ws->b, qp);
  auto [xc1, xc2] = side_pair(ws->comp_c, ws->c, qpp);

  // The remaining mass lives on the bottom and top components; the
  // borrowed deficits come out of the corner masses.
  Poset wp = sp.induced(ws->comp_a | ws->comp_d);
  int a_w = wp.index_of(sp.name(ws->a));
  int d_w = wp.index_of(sp.name(ws->d));
  RationalMeasure o1 = truncate_measure(p1, wp);
  o1.mass[a_w] -= (qp - p1.mass_of(ws->comp_b)) + (qpp - p1.mass_of(ws->comp_c));
  RationalMeasure o2 = truncate_measure(p2, wp);
  o2.mass[d_w] -= (qp - p2.mass_of(ws->comp_b)) + (qpp - p2.mass_of(ws->comp_c));
  if (o1.mass[a_w] < 0 || o2.mass[d_w] < 0)
    fail(Errc::HypothesisViolated, "side remainders turned negative");
  RootedTree ot(wp, sp.name(ws->d));
  PlaneTree oplane(std::move(ot));
  DistributionFunction f1 = distribution_function(o1, oplane.tree());
  DistributionFunction f2 = distribution_function(o2, oplane.tree());
  InterlacedDistribution omu = interlaced_mu(f1, f2, oplane, false);
  InverseTransform xo1 = build_rit(oplane, omu, f1.f).relabeled(sp);
  InverseTransform xo2 = build_rit(oplane, omu, f2.f).relabeled(sp);

  auto concat = [&](const InverseTransform& xb, const InverseTransform& xc,
                    const InverseTransform& xo) {
    InverseTransform x{sp, {}};
    for (const Interval& part : xb.parts) x.parts.push_back(part);
    for (Interval part : xc.parts) {
      part.lo += qp;
      part.hi += qp;
      x.parts.push_back(std::move(part));
    }
    for (Interval part : xo.parts) {
      part.lo += qp + qpp;
      part.hi += qp + qpp;
      x.parts.push_back(std::move(part));
    }
    x.normalize();
    return x;
  };
  InverseTransform x1 = concat(xb1, xc1, xo1), x2 = concat(xb2, xc2, xo2);

  for (int y = 0; y < sp.size(); ++y)
    if (x1.length_where(y) != p1.mass[y] || x2.length_where(y) != p2.mass[y])
      fail(Errc::MarginalMismatch, "coupling transforms missed the marginals");
  if (!pointwise_leq(x1, x2))
    fail(Errc::HypothesisViolated, "coupling lost the pointwise order");
  return {std::move(x1), std::move(x2)};
}

}  // namespace monoteq
