#include "monoteq/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "monoteq/patterns.hpp"

namespace monoteq {

const char* verdict_kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Acyclic: return "acyclic";
    case Verdict::Kind::YGluedBipartite: return "y-glued-bipartite";
    case Verdict::Kind::WGluedDiamond: return "w-glued-diamond";
    case Verdict::Kind::Fails: return "fails";
  }
  return "?";
}

bool is_acyclic(const Poset& p) {
  return p.connected() && p.cover_count() == p.size() - 1;
}

bool is_y_class(const Poset& p) {
  return is_acyclic(p) && !has_induced(p, patterns::bowtie());
}

bool is_w_class(const Poset& p) {
  if (!is_y_class(p)) return false;
  Poset y = patterns::y_poset();
  return !has_induced(p, y) && !has_induced(p, y.dual());
}

std::vector<BipartitePair> maximal_bipartites(const Poset& p) {
  // A pair (A, B) with every b in B covering every a in A and both sides
  // of size >= 2 forces both sides to be antichains automatically, and a
  // maximal such pair is exactly a closed pair: B is every common cover
  // of A, and A is every common covered element of B.
  int n = p.size();
  std::vector<BipartitePair> out;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    if (popcount(a) < 2) continue;
    Mask b = p.all();
    for (int i = 0; i < n && b; ++i)
      if ((a >> i) & 1) b &= p.covers_of(i);
    if (popcount(b) < 2) continue;
    Mask closure = p.all();
    for (int j = 0; j < n; ++j)
      if ((b >> j) & 1) closure &= p.covered_by(j);
    if (closure == a) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(), [](const BipartitePair& x, const BipartitePair& y) {
    return std::pair(x.lower, x.upper) < std::pair(y.lower, y.upper);
  });
  return out;
}

ExtSplit algorithm_ext(const Poset& p, const BipartitePair& pair) {
  auto all = maximal_bipartites(p);
  if (std::find(all.begin(), all.end(), pair) == all.end())
    fail(Errc::NotMaximalBipartite, "not a maximal complete bipartite Hasse subgraph");

  int n = p.size();
  std::string c_name = "c";
  while (p.find(c_name) >= 0) c_name += "'";
  std::vector<std::string> names = p.elements();
  names.push_back(c_name);
  std::sort(names.begin(), names.end());
  int nn = n + 1;
  std::vector<int> to_new(n);  // old index -> new index
  for (int i = 0; i < n; ++i)
    to_new[i] = static_cast<int>(std::lower_bound(names.begin(), names.end(), p.name(i)) -
                                 names.begin());
  int ci = static_cast<int>(std::lower_bound(names.begin(), names.end(), c_name) -
                            names.begin());

  // Old relations survive unchanged: removed arcs a < b are restored
  // through a < c < b and no other comparabilities appear.
  Mask c_down = Mask{1} << ci, c_up = Mask{1} << ci;
  for (int i = 0; i < n; ++i) {
    if ((pair.lower >> i) & 1)
      for (int j = 0; j < n; ++j)
        if ((p.down_of(i) >> j) & 1) c_down |= Mask{1} << to_new[j];
    if ((pair.upper >> i) & 1)
      for (int j = 0; j < n; ++j)
        if ((p.up_of(i) >> j) & 1) c_up |= Mask{1} << to_new[j];
  }
  std::vector<Mask> up(nn, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) up[to_new[i]] |= Mask{1} << to_new[j];
  up[ci] = c_up;
  for (int j = 0; j < nn; ++j)
    if ((c_down >> j) & 1) up[j] |= Mask{1} << ci;
  Poset s_hat = Poset::from_order(names, up);

  // Components of the extended Hasse diagram with c removed; the halves
  // collect everything reachable through the lower resp. upper side.
  std::vector<int> comp(nn, -1);
  int nc = 0;
  for (int s = 0; s < nn; ++s) {
    if (s == ci || comp[s] >= 0) continue;
    std::vector<int> queue{s};
    comp[s] = nc;
    for (size_t q = 0; q < queue.size(); ++q) {
      Mask nb = s_hat.covers_of(queue[q]) | s_hat.covered_by(queue[q]);
      for (int y = 0; y < nn; ++y)
        if (((nb >> y) & 1) && y != ci && comp[y] < 0) {
          comp[y] = nc;
          queue.push_back(y);
        }
    }
    ++nc;
  }
  Mask m1 = Mask{1} << ci, m2 = Mask{1} << ci;
  std::vector<bool> via_lower(nc, false), via_upper(nc, false);
  for (int i = 0; i < n; ++i) {
    if ((pair.lower >> i) & 1) via_lower[comp[to_new[i]]] = true;
    if ((pair.upper >> i) & 1) via_upper[comp[to_new[i]]] = true;
  }
  for (int x = 0; x < nn; ++x) {
    if (x == ci) continue;
    if (via_lower[comp[x]]) m1 |= Mask{1} << x;
    if (via_upper[comp[x]]) m2 |= Mask{1} << x;
  }
  return {s_hat, s_hat.induced(m1), s_hat.induced(m2), c_name};
}

namespace {

std::string structure_key(const Poset& p) {
  std::ostringstream os;
  os << p.size();
  for (int i = 0; i < p.size(); ++i) os << ':' << p.up_of(i);
  return os.str();
}

bool extension_search(const Poset& p, std::set<std::string>& seen) {
  if (p.cover_count() == p.size() - 1) return true;
  if (!seen.insert(structure_key(p)).second) return false;
  for (const auto& pair : maximal_bipartites(p))
    if (extension_search(algorithm_ext(p, pair).s_hat, seen)) return true;
  return false;
}

}  // namespace

bool has_acyclic_extension(const Poset& p) {
  if (!p.connected()) fail(Errc::NotConnected, "poset must be connected");
  std::set<std::string> seen;
  return extension_search(p, seen);
}

std::optional<BipartitePair> y_glued_bipartite_evidence(const Poset& p) {
  if (is_acyclic(p)) return std::nullopt;
  auto pairs = maximal_bipartites(p);
  if (pairs.size() != 1) return std::nullopt;
  ExtSplit ext = algorithm_ext(p, pairs[0]);
  // The two halves must meet exactly in the midpoint and cover everything.
  if (ext.s1.size() + ext.s2.size() != ext.s_hat.size() + 1) return std::nullopt;
  if (!is_y_class(ext.s1) || !is_y_class(ext.s2)) return std::nullopt;
  return pairs[0];
}

bool is_y_glued_bipartite(const Poset& p) {
  return y_glued_bipartite_evidence(p).has_value();
}

std::vector<std::array<int, 4>> induced_diamonds(const Poset& p) {
  std::set<std::array<int, 4>> keys;
  for (const auto& e : find_induced(p, patterns::diamond()))
    keys.insert({e[0], std::min(e[1], e[2]), std::max(e[1], e[2]), e[3]});
  return {keys.begin(), keys.end()};
}

namespace {

// Connected component of `start` in the Hasse graph with the four diamond
// arcs removed.
Mask deleted_component(const Poset& p, const std::array<int, 4>& dia, int start) {
  auto deleted = [&](int x, int y) {
    auto [a, b, c, d] = dia;
    return (x == a && (y == b || y == c)) || ((x == b || x == c) && y == d);
  };
  Mask seen = Mask{1} << start;
  std::vector<int> queue{start};
  for (size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (int y = 0; y < p.size(); ++y) {
      if ((seen >> y) & 1) continue;
      bool edge = (p.is_cover(x, y) && !deleted(x, y)) ||
                  (p.is_cover(y, x) && !deleted(y, x));
      if (edge) {
        seen |= Mask{1} << y;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

std::optional<WGluedStructure> w_glued_structure(const Poset& p) {
  auto diamonds = induced_diamonds(p);
  if (diamonds.size() != 1) return std::nullopt;
  Poset s1 = patterns::s1();
  if (has_induced(p, s1) || has_induced(p, s1.dual()) ||
      has_induced(p, patterns::s4_hat()))
    return std::nullopt;
  auto dia = diamonds[0];
  // Uniqueness forces the diamond relations to be Hasse arcs.
  if (!p.is_cover(dia[0], dia[1]) || !p.is_cover(dia[0], dia[2]) ||
      !p.is_cover(dia[1], dia[3]) || !p.is_cover(dia[2], dia[3]))
    return std::nullopt;
  WGluedStructure w;
  w.a = dia[0];
  w.b = dia[1];
  w.c = dia[2];
  w.d = dia[3];
  w.comp_a = deleted_component(p, dia, w.a);
  w.comp_b = deleted_component(p, dia, w.b);
  w.comp_c = deleted_component(p, dia, w.c);
  w.comp_d = deleted_component(p, dia, w.d);
  Mask comps[4] = {w.comp_a, w.comp_b, w.comp_c, w.comp_d};
  Mask seen = 0;
  for (Mask m : comps) {
    if (m & seen) return std::nullopt;
    seen |= m;
  }
  if (seen != p.all()) return std::nullopt;
  for (Mask m : comps)
    if (!is_w_class(p.induced(m))) return std::nullopt;
  return w;
}

bool is_w_glued_diamond(const Poset& p) {
  return w_glued_structure(p).has_value();
}

namespace {

std::string y_glued_failure(const Poset& p) {
  auto pairs = maximal_bipartites(p);
  if (pairs.empty()) return "no maximal complete bipartite subgraph";
  if (pairs.size() > 1) return "multiple maximal complete bipartite subgraphs";
  ExtSplit ext = algorithm_ext(p, pairs[0]);
  if (ext.s1.size() + ext.s2.size() != ext.s_hat.size() + 1)
    return "extension halves overlap beyond the midpoint";
  if (!is_y_class(ext.s1) || !is_y_class(ext.s2))
    return "an extension half is not Y-class";
  return "";
}

std::string w_glued_failure(const Poset& p) {
  auto diamonds = induced_diamonds(p);
  if (diamonds.empty()) return "no induced diamond";
  if (diamonds.size() > 1) return "diamond is not unique";
  Poset s1 = patterns::s1();
  if (has_induced(p, s1)) return "diamond has an element below its bottom";
  if (has_induced(p, s1.dual())) return "diamond has an element above its top";
  if (has_induced(p, patterns::s4_hat()))
    return "a diamond side carries elements both above and below";
  auto dia = diamonds[0];
  Mask comps[4] = {deleted_component(p, dia, dia[0]), deleted_component(p, dia, dia[1]),
                   deleted_component(p, dia, dia[2]), deleted_component(p, dia, dia[3])};
  Mask seen = 0;
  for (Mask m : comps) {
    if (m & seen) return "diamond arcs do not disconnect the four branches";
    seen |= m;
  }
  for (Mask m : comps)
    if (!is_w_class(p.induced(m))) return "a diamond branch is not W-class";
  return "";
}

}  // namespace

Verdict verdict(const Poset& p) {
  if (!p.connected()) fail(Errc::NotConnected, "poset must be connected");
  Verdict v;
  if (is_acyclic(p)) {
    v.kind = Verdict::Kind::Acyclic;
    return v;
  }
  if (auto pair = y_glued_bipartite_evidence(p)) {
    v.kind = Verdict::Kind::YGluedBipartite;
    v.bipartite = pair;
    return v;
  }
  if (auto w = w_glued_structure(p)) {
    v.kind = Verdict::Kind::WGluedDiamond;
    v.diamond = w;
    return v;
  }
  v.kind = Verdict::Kind::Fails;
  std::string y = y_glued_failure(p), w = w_glued_failure(p);
  v.reason = y.empty() ? w : (w.empty() ? y : y + "; " + w);
  return v;
}

}  // namespace monoteq
