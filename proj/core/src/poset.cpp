#include "monoteq/poset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "monoteq/rational.hpp"

namespace monoteq {

int popcount(Mask m) { return std::popcount(m); }

Poset Poset::from_cover_edges(const std::vector<std::string>& elements,
                              const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.names_ = elements;
  std::sort(p.names_.begin(), p.names_.end());
  if (std::adjacent_find(p.names_.begin(), p.names_.end()) != p.names_.end())
    fail(Errc::ParseError, "duplicate element");
  int n = p.size();
  if (n == 0) fail(Errc::ParseError, "empty element list");
  if (n > kMaxElements) fail(Errc::SizeLimit, "too many elements");

  p.cov_up_.assign(n, 0);
  for (auto& [lo, hi] : covers) {
    int i = p.index_of(lo), j = p.index_of(hi);
    if (i == j) fail(Errc::DirectedCycle, "self-cover at " + lo);
    p.cov_up_[i] |= Mask{1} << j;
  }

  // Reflexive-transitive closure of the cover digraph; cycle detection by
  // checking antisymmetry afterwards.
  p.up_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up_[i] = (Mask{1} << i) | p.cov_up_[i];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask m = p.up_[i];
      for (int j = 0; j < n; ++j)
        if ((m >> j) & 1) m |= p.up_[j];
      if (m != p.up_[i]) { p.up_[i] = m; changed = true; }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        fail(Errc::DirectedCycle, "cycle through " + p.names_[i] + " and " + p.names_[j]);

  // Every declared cover must be a genuine Hasse edge.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((p.cov_up_[i] >> j) & 1) {
        Mask between = p.up_[i] & p.down_helper(j) & ~(Mask{1} << i) & ~(Mask{1} << j);
        if (between)
          fail(Errc::RedundantCover,
               "cover " + p.names_[i] + " < " + p.names_[j] + " is transitively implied");
      }

  p.derive_from_up();
  return p;
}

// down-mask of j computed from up-masks (used before derive_from_up).
Mask Poset::down_helper(int j) const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if ((up_[i] >> j) & 1) m |= Mask{1} << i;
  return m;
}

Poset Poset::from_order(const std::vector<std::string>& elements,
                        const std::vector<Mask>& up) {
  Poset p;
  p.names_ = elements;
  p.up_ = up;
  p.derive_from_up();
  return p;
}

void Poset::derive_from_up() {
  int n = size();
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((up_[i] >> j) & 1) down_[j] |= Mask{1} << i;
  // transitive reduction
  cov_up_.assign(n, 0);
  cov_down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      Mask between = up_[i] & down_[j] & ~(Mask{1} << i) & ~(Mask{1} << j);
      if (!between) {
        cov_up_[i] |= Mask{1} << j;
        cov_down_[j] |= Mask{1} << i;
      }
    }
}

int Poset::index_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) fail(Errc::UnknownElement, name);
  return i;
}

int Poset::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

bool Poset::leq(const std::string& x, const std::string& y) const {
  return leq(index_of(x), index_of(y));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (is_cover(i, j)) out.emplace_back(i, j);
  return out;
}

int Poset::cover_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += popcount(cov_up_[i]);
  return c;
}

bool Poset::is_up_set(Mask u) const {
  for (int i = 0; i < size(); ++i)
    if ((u >> i) & 1 && (up_[i] & ~u)) return false;
  return true;
}

bool Poset::is_down_set(Mask u) const {
  for (int i = 0; i < size(); ++i)
    if ((u >> i) & 1 && (down_[i] & ~u)) return false;
  return true;
}

std::vector<Mask> Poset::up_sets() const {
  // Walk elements from maximal to minimal; an element may join only when
  // everything above it is already in.
  std::vector<int> order = linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<Mask> out;
  std::vector<std::pair<int, Mask>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, m] = stack.back();
    stack.pop_back();
    if (k == size()) {
      out.push_back(m);
      continue;
    }
    int e = order[k];
    stack.push_back({k + 1, m});
    if ((up_of(e) & ~(Mask{1} << e) & ~m) == 0)
      stack.push_back({k + 1, m | (Mask{1} << e)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset Poset::induced(Mask subset) const {
  std::vector<int> keep;
  for (int i = 0; i < size(); ++i)
    if ((subset >> i) & 1) keep.push_back(i);
  std::vector<std::string> names;
  for (int i : keep) names.push_back(names_[i]);
  int m = static_cast<int>(keep.size());
  std::vector<Mask> up(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (leq(keep[a], keep[b])) up[a] |= Mask{1} << b;
  return from_order(names, up);
}

Poset Poset::induced(const std::vector<std::string>& subset) const {
  Mask m = 0;
  for (auto& s : subset) m |= Mask{1} << index_of(s);
  return induced(m);
}

Poset Poset::dual() const {
  Poset p;
  p.names_ = names_;
  p.up_ = down_;
  p.derive_from_up();
  return p;
}

bool Poset::connected() const {
  if (size() == 0) return false;
  Mask seen = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < size(); ++i)
      if ((seen >> i) & 1) {
        Mask nb = cov_up_[i] | cov_down_[i];
        if (nb & ~seen) { seen |= nb; grew = true; }
      }
  }
  return seen == all();
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  Mask done = 0;
  while (done != all()) {
    for (int i = 0; i < size(); ++i) {
      if ((done >> i) & 1) continue;
      if ((down_[i] & ~(Mask{1} << i) & ~done) == 0) {
        out.push_back(i);
        done |= Mask{1} << i;
        break;
      }
    }
  }
  return out;
}

Mask Poset::minimal_elements() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (down_[i] == (Mask{1} << i)) m |= Mask{1} << i;
  return m;
}

Mask Poset::maximal_elements() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (up_[i] == (Mask{1} << i)) m |= Mask{1} << i;
  return m;
}

bool Poset::same_order_as(const Poset& other) const {
  return names_ == other.names_ && up_ == other.up_;
}

Poset glue(const Poset& p1, const Poset& p2, const std::string& shared) {
  std::vector<std::string> common;
  std::set_intersection(p1.elements().begin(), p1.elements().end(),
                        p2.elements().begin(), p2.elements().end(),
                        std::back_inserter(common));
  if (common.size() != 1 || common[0] != shared)
    fail(Errc::BadIntersection, "element sets must intersect exactly in {" + shared + "}");
  std::vector<std::string> names;
  std::set_union(p1.elements().begin(), p1.elements().end(),
                 p2.elements().begin(), p2.elements().end(),
                 std::back_inserter(names));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [i, j] : p1.cover_pairs()) covers.emplace_back(p1.name(i), p1.name(j));
  for (auto [i, j] : p2.cover_pairs()) covers.emplace_back(p2.name(i), p2.name(j));
  return Poset::from_cover_edges(names, covers);
}

namespace {

void find_induced_rec(const Poset& host, const Poset& pattern, std::vector<int>& map,
                      Mask used, std::vector<std::vector<int>>& out) {
  int k = static_cast<int>(map.size());
  if (k == pattern.size()) {
    out.push_back(map);
    return;
  }
  for (int v = 0; v < host.size(); ++v) {
    if ((used >> v) & 1) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      ok = pattern.leq(i, k) == host.leq(map[i], v) &&
           pattern.leq(k, i) == host.leq(v, map[i]);
    if (!ok) continue;
    map.push_back(v);
    find_induced_rec(host, pattern, map, used | (Mask{1} << v), out);
    map.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> find_induced(const Poset& host, const Poset& pattern) {
  std::vector<std::vector<int>> out;
  std::vector<int> map;
  find_induced_rec(host, pattern, map, 0, out);
  return out;
}

bool has_induced(const Poset& host, const Poset& pattern) {
  return !find_induced(host, pattern).empty();
}

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.cover_count() != b.cover_count()) return false;
  return has_induced(a, b);
}

bool is_monotone(const Poset& a, const Poset& s, const std::vector<int>& assignment) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.leq(i, j) && !s.leq(assignment[i], assignment[j])) return false;
  return true;
}

namespace {

void monotone_rec(const Poset& a, const Poset& s, std::vector<int>& f, int k,
                  std::vector<MonotoneMap>& out, unsigned long bound) {
  if (k == a.size()) {
    if (out.size() >= bound)
      fail(Errc::SizeLimit, "monotone map enumeration exceeds bound");
    out.push_back({f});
    return;
  }
  for (int v = 0; v < s.size(); ++v) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (a.leq(i, k) && !s.leq(f[i], v)) ok = false;
      if (a.leq(k, i) && !s.leq(v, f[i])) ok = false;
    }
    if (!ok) continue;
    f[k] = v;
    monotone_rec(a, s, f, k + 1, out, bound);
  }
}

}  // namespace

std::vector<MonotoneMap> monotone_maps(const Poset& a, const Poset& s,
                                       unsigned long bound) {
  std::vector<MonotoneMap> out;
  std::vector<int> f(a.size(), 0);
  monotone_rec(a, s, f, 0, out, bound);
  return out;
}

RootedTree::RootedTree(Poset poset, int root) : poset_(std::move(poset)), root_(root) {
  build();
}

RootedTree::RootedTree(Poset poset, const std::string& root)
    : poset_(std::move(poset)), root_(poset_.index_of(root)) {
  build();
}

void RootedTree::build() {
  const Poset& p = poset_;
  int n = p.size();
  if (!p.connected() || p.cover_count() != n - 1)
    fail(Errc::NotAcyclic, "rooted tree requires a connected acyclic Hasse diagram");
  Mask extremes = p.minimal_elements() | p.maximal_elements();
  if (!((extremes >> root_) & 1))
    fail(Errc::BadIndex, "root must be a maximal or minimal element");
  parent_.assign(n, -1);
  children_.assign(n, {});
  std::vector<int> queue{root_};
  Mask seen = Mask{1} << root_;
  for (size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    Mask nb = p.covers_of(x) | p.covered_by(x);
    for (int y = 0; y < n; ++y)
      if (((nb >> y) & 1) && !((seen >> y) & 1)) {
        seen |= Mask{1} << y;
        parent_[y] = x;
        children_[x].push_back(y);
        queue.push_back(y);
      }
  }
  subtree_.assign(n, 0);
  for (auto it = queue.rbegin(); it != queue.rend(); ++it) {
    int x = *it;
    subtree_[x] = Mask{1} << x;
    for (int c : children_[x]) subtree_[x] |= subtree_[c];
  }
}

bool RootedTree::tree_leq(int x, int y) const {
  return (subtree_[y] >> x) & 1;
}

bool RootedTree::closed_section_is_down_set(int x) const {
  return poset_.is_down_set(subtree_[x]);
}

bool RootedTree::closed_section_is_up_set(int x) const {
  return poset_.is_up_set(subtree_[x]);
}

}  // namespace monoteq
