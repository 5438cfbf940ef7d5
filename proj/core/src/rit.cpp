#include "monoteq/rit.hpp"

#include <algorithm>
#include <map>

#include "monoteq/classify.hpp"
#include "monoteq/error.hpp"

namespace monoteq {

Rat InverseTransform::total() const {
  return parts.empty() ? Rat(0) : parts.back().hi;
}

int InverseTransform::value_at(const Rat& omega) const {
  for (const Interval& p : parts)
    if (p.lo <= omega && omega < p.hi) return p.value;
  fail(Errc::BadIndex, "point outside the transform's domain");
}

Rat InverseTransform::length_where(int value) const {
  Rat t = 0;
  for (const Interval& p : parts)
    if (p.value == value) t += p.hi - p.lo;
  return t;
}

Rat InverseTransform::length_in(Mask subset) const {
  Rat t = 0;
  for (const Interval& p : parts)
    if ((subset >> p.value) & 1) t += p.hi - p.lo;
  return t;
}

std::vector<std::pair<Rat, Rat>> InverseTransform::preimage(int value) const {
  std::vector<std::pair<Rat, Rat>> out;
  for (const Interval& p : parts) {
    if (p.value != value || p.lo == p.hi) continue;
    if (!out.empty() && out.back().second == p.lo)
      out.back().second = p.hi;
    else
      out.emplace_back(p.lo, p.hi);
  }
  return out;
}

void InverseTransform::normalize() {
  std::vector<Interval> merged;
  for (Interval& p : parts) {
    if (p.lo == p.hi) continue;
    if (!merged.empty() && merged.back().value == p.value && merged.back().hi == p.lo)
      merged.back().hi = p.hi;
    else
      merged.push_back(std::move(p));
  }
  parts = std::move(merged);
}

void InverseTransform::replace(const std::vector<std::pair<Rat, Rat>>& segments,
                               int from, int to) {
  for (const auto& [lo, hi] : segments) {
    if (lo > hi) fail(Errc::HypothesisViolated, "inverted replacement segment");
    if (lo == hi) continue;
    Rat covered = 0;
    std::vector<Interval> next;
    for (const Interval& p : parts) {
      Rat ilo = std::max(p.lo, lo), ihi = std::min(p.hi, hi);
      if (ilo >= ihi) {
        next.push_back(p);
        continue;
      }
      if (p.value != from)
        fail(Errc::HypothesisViolated, "replacement segment leaves the expected preimage");
      covered += ihi - ilo;
      if (p.lo < ilo) next.push_back({p.lo, ilo, p.value});
      next.push_back({ilo, ihi, to});
      if (ihi < p.hi) next.push_back({ihi, p.hi, p.value});
    }
    if (covered != hi - lo)
      fail(Errc::HypothesisViolated, "replacement segment outside the domain");
    parts = std::move(next);
  }
  normalize();
}

std::vector<Rat> InverseTransform::breakpoints() const {
  std::vector<Rat> out;
  for (const Interval& p : parts) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InverseTransform InverseTransform::relabeled(const Poset& to) const {
  InverseTransform out{to, parts};
  for (Interval& p : out.parts) p.value = to.index_of(support.name(p.value));
  return out;
}

std::vector<Rat> common_breakpoints(const std::vector<InverseTransform>& family) {
  std::vector<Rat> out;
  for (const InverseTransform& x : family)
    for (const Rat& b : x.breakpoints()) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pointwise_leq(const InverseTransform& x1, const InverseTransform& x2) {
  if (!x1.support.same_order_as(x2.support))
    fail(Errc::SupportMismatch, "pointwise comparison needs a common support");
  if (x1.total() != x2.total()) return false;
  std::vector<Rat> bs = common_breakpoints({x1, x2});
  for (size_t i = 0; i + 1 < bs.size(); ++i)
    if (!x1.support.leq(x1.value_at(bs[i]), x2.value_at(bs[i]))) return false;
  return true;
}

bool realizes_df(const InverseTransform& x, const DistributionFunction& f) {
  const RootedTree& t = f.tree;
  if (!x.support.same_order_as(t.poset())) return false;
  for (int v = 0; v < x.support.size(); ++v)
    if (x.length_in(t.section_closed(v)) != f.f[v]) return false;
  return x.total() == f.total();
}

MapDistribution transforms_to_map_distribution(const Poset& index,
                                               const std::vector<InverseTransform>& family) {
  if (static_cast<int>(family.size()) != index.size())
    fail(Errc::BadIndex, "one transform per index element required");
  for (const InverseTransform& x : family) {
    if (!x.support.same_order_as(family[0].support))
      fail(Errc::SupportMismatch, "transform family needs a common support");
    if (x.total() != family[0].total())
      fail(Errc::MassMismatch, "transform family needs a common domain");
  }
  std::vector<Rat> bs = common_breakpoints(family);
  std::map<std::vector<int>, Rat> law;
  for (size_t i = 0; i + 1 < bs.size(); ++i) {
    std::vector<int> h(family.size());
    for (size_t a = 0; a < family.size(); ++a) h[a] = family[a].value_at(bs[i]);
    law[h] += bs[i + 1] - bs[i];
  }
  MapDistribution d{index, family.empty() ? Poset::from_cover_edges({}, {}) : family[0].support,
                    {}, {}};
  for (auto& [h, w] : law) {
    d.maps.push_back({h});
    d.weight.push_back(w);
  }
  return d;
}

PlaneTree::PlaneTree(RootedTree tree, Mask stop_at) : tree_(std::move(tree)) {
  node_of_.assign(tree_.poset().size(), -1);
  // Iterative construction; children collected before assignment because
  // recursion reallocates the node vector.
  struct Frame {
    int start, parent;
  };
  std::vector<Frame> stack{{tree_.root(), -1}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({{fr.start}, fr.parent, {}});
    if (fr.parent >= 0) nodes_[fr.parent].children.push_back(id);
    int v = fr.start;
    node_of_[v] = id;
    while (tree_.children(v).size() == 1 && !((stop_at >> v) & 1)) {
      v = tree_.children(v)[0];
      nodes_[id].path.push_back(v);
      node_of_[v] = id;
    }
    // Push in reverse so children pop in ascending vertex order; the
    // rooted tree's child lists are already index-sorted.
    const std::vector<int>& succ = tree_.children(v);
    for (auto it = succ.rbegin(); it != succ.rend(); ++it) stack.push_back({*it, id});
  }
}

int PlaneTree::extension_vertex(int k) const {
  if (nodes_[k].parent < 0)
    fail(Errc::BadIndex, "the root node has no extension vertex");
  return u_star(nodes_[k].parent);
}

Rat InterlacedDistribution::minus(const PlaneTree& k, int node) const {
  Rat t = 0;
  for (int c : k.node(node).children) t += mu[c];
  return t;
}

Rat InterlacedDistribution::prefix(const PlaneTree& k, int node, int count) const {
  Rat t = 0;
  const std::vector<int>& c = k.node(node).children;
  for (int i = 0; i < count; ++i) t += mu[c[i]];
  return t;
}

InterlacedDistribution interlaced_mu(const DistributionFunction& fa,
                                     const DistributionFunction& fd,
                                     const PlaneTree& k, bool check_order) {
  const Poset& p = k.tree().poset();
  if (!fa.tree.poset().same_order_as(p) || !fd.tree.poset().same_order_as(p) ||
      fa.tree.root() != k.tree().root() || fd.tree.root() != k.tree().root())
    fail(Errc::SupportMismatch, "distribution functions live on a different tree");
  if (check_order && !df_stoch_leq(fa, fd))
    fail(Errc::NotOrdered, "extreme distribution functions are not ordered");
  InterlacedDistribution out;
  out.mu.resize(k.size());
  for (int n = 0; n < k.size(); ++n)
    out.mu[n] = std::max(fa.f[k.u1(n)], fd.f[k.u1(n)]);
  return out;
}

InverseTransform build_rit_node(const PlaneTree& k, const InterlacedDistribution& mu,
                                const std::vector<Rat>& f, int node) {
  InverseTransform out{k.tree().poset(), {}};
  Rat cur = 0;
  for (int child : k.node(node).children) {
    InverseTransform sub = build_rit_node(k, mu, f, child);
    for (Interval& p : sub.parts) out.parts.push_back({p.lo + cur, p.hi + cur, p.value});
    cur += mu.mu[child];
  }
  // cur == mu(node-): sweep the path from its deepest vertex upward.
  const std::vector<int>& path = k.node(node).path;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Rat& fx = f[*it];
    if (fx < cur)
      fail(Errc::NotInterlaced, "distribution falls below the accumulated child mass");
    if (fx > cur) {
      out.parts.push_back({cur, fx, *it});
      cur = fx;
    }
  }
  const Rat& top = mu.mu[node];
  if (cur > top)
    fail(Errc::NotInterlaced, "distribution exceeds the node's mu value");
  if (cur < top) {
    if (node == k.root())
      fail(Errc::NotInterlaced, "mu at the root must equal the total mass");
    out.parts.push_back({cur, top, k.extension_vertex(node)});
  }
  return out;
}

InverseTransform build_rit(const PlaneTree& k, const InterlacedDistribution& mu,
                           const std::vector<Rat>& f) {
  InverseTransform out = build_rit_node(k, mu, f, k.root());
  out.normalize();
  return out;
}

std::vector<std::pair<Rat, Rat>> u_star_preimage(const PlaneTree& k,
                                                 const InterlacedDistribution& mu,
                                                 const std::vector<Rat>& f, int node) {
  std::vector<std::pair<Rat, Rat>> segs;
  Rat off = 0;
  for (int child : k.node(node).children) {
    Rat lo = off + f[k.u1(child)], hi = off + mu.mu[child];
    if (lo < hi) segs.emplace_back(lo, hi);
    off += mu.mu[child];
  }
  const Rat& fu = f[k.u_star(node)];
  if (off < fu) segs.emplace_back(off, fu);
  std::sort(segs.begin(), segs.end());
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& s : segs) {
    if (!merged.empty() && merged.back().second == s.first)
      merged.back().second = s.second;
    else
      merged.push_back(s);
  }
  return merged;
}

WClassRealization w_class_realize(const MeasureSystem& s) {
  if (!is_w_class(s.support))
    fail(Errc::NotWClass, "support poset is not of W-class");
  if (popcount(s.index.minimal_elements()) != 1 ||
      popcount(s.index.maximal_elements()) != 1)
    fail(Errc::NoExtremes, "index poset needs a minimum and a maximum");
  for (const RationalMeasure& m : s.family)
    if (m.total() != s.family[0].total())
      fail(Errc::MassMismatch, "system members must share one total mass");
  if (!system_is_stoch_monotone(s))
    fail(Errc::NotStochasticallyMonotone, "system is not stochastically monotone");
  int root = 0;
  while (!((s.support.maximal_elements() >> root) & 1)) ++root;
  RootedTree rt(s.support, root);
  PlaneTree plane(rt);
  int lo = 0, hi = 0;
  while (!((s.index.minimal_elements() >> lo) & 1)) ++lo;
  while (!((s.index.maximal_elements() >> hi) & 1)) ++hi;
  DistributionFunction fa = distribution_function(s.family[lo], rt);
  DistributionFunction fd = distribution_function(s.family[hi], rt);
  InterlacedDistribution mu = interlaced_mu(fa, fd, plane);
  WClassRealization out{std::move(plane), std::move(mu), {}};
  for (int a = 0; a < s.index.size(); ++a) {
    DistributionFunction f = distribution_function(s.family[a], rt);
    out.transforms.push_back(build_rit(out.plane, out.mu, f.f));
  }
  return out;
}

}  // namespace monoteq
