#include "monoteq/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "monoteq/classify.hpp"
#include "monoteq/error.hpp"
#include "monoteq/lp.hpp"

namespace monoteq {

namespace {

/// Enumerate naturally labeled strict orders (relation only between
/// i < j) by choosing each new element's downward-closed predecessor
/// set; every isomorphism class appears at least once.
void natural_orders(int n, std::vector<Mask>& down, std::vector<std::vector<Mask>>& out) {
  int k = static_cast<int>(down.size());
  if (k == n) {
    out.push_back(down);
    return;
  }
  for (Mask d = 0; d < (Mask{1} << k); ++d) {
    bool closed = true;
    for (int i = 0; i < k && closed; ++i)
      if (((d >> i) & 1) && (down[i] & ~d)) closed = false;
    if (!closed) continue;
    down.push_back(d);
    natural_orders(n, down, out);
    down.pop_back();
  }
}

std::uint64_t encode(int n, const std::vector<Mask>& down, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((down[j] >> i) & 1)
        code |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return code;
}

}  // namespace

std::vector<Poset> connected_posets(int n) {
  if (n < 1 || n > 6) fail(Errc::SizeLimit, "enumeration supported for 1..6 elements");
  std::vector<std::vector<Mask>> labeled;
  std::vector<Mask> down;
  natural_orders(n, down, labeled);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> canon;
  for (const std::vector<Mask>& d : labeled) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const std::vector<int>& pm : perms) best = std::min(best, encode(n, d, pm));
    canon.insert(best);
  }

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Poset> out;
  for (std::uint64_t code : canon) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) {
      up[i] = Mask{1} << i;
      for (int j = 0; j < n; ++j)
        if ((code >> (i * n + j)) & 1) up[i] |= Mask{1} << j;
    }
    Poset p = Poset::from_order(names, up);
    if (p.connected()) out.push_back(std::move(p));
  }
  return out;
}

int RandomSource::uniform(int lo, int hi) {
  return static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
}

Rat RandomSource::unit_rat(int max_den) {
  int d = uniform(1, max_den);
  return rat(uniform(0, d), d);
}

RationalMeasure random_measure(const Poset& p, RandomSource& rng) {
  int den = rng.uniform(2, 12);
  RationalMeasure m{p, std::vector<Rat>(p.size(), 0)};
  int left = den;
  for (int y = 0; y + 1 < p.size(); ++y) {
    int k = rng.uniform(0, left);
    m.mass[y] = rat(k, den);
    left -= k;
  }
  m.mass[p.size() - 1] = rat(left, den);
  return m;
}

namespace {

/// One vertex of the polytope described by `lp` under a fresh random
/// objective; the polytope must be nonempty and bounded.
std::vector<Rat> random_vertex(LinearProgram lp, RandomSource& rng) {
  for (int v = 0; v < lp.num_vars(); ++v)
    lp.set_objective(v, Rat(rng.uniform(-6, 6)));
  LpResult r = lp_maximize(lp);
  if (!r.feasible || r.unbounded)
    fail(Errc::BadIndex, "sampling polytope is empty or unbounded");
  return r.x;
}

std::vector<Rat> averaged_vertices(const LinearProgram& lp, RandomSource& rng) {
  std::vector<Rat> a = random_vertex(lp, rng);
  std::vector<Rat> b = random_vertex(lp, rng);
  for (size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) / 2;
  return a;
}

}  // namespace

MeasureSystem random_monotone_kernel(const Poset& p, RandomSource& rng) {
  int n = p.size();
  LinearProgram lp;
  for (int i = 0; i < n * n; ++i) lp.add_var(true);
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<int, Rat>> row;
    for (int y = 0; y < n; ++y) row.emplace_back(x * n + y, 1);
    lp.add_row(row, LinearProgram::Rel::Eq, 1);
  }
  std::vector<Mask> ups = p.up_sets();
  for (auto [x, y] : p.cover_pairs())
    for (Mask u : ups) {
      std::vector<std::pair<int, Rat>> row;
      for (int z = 0; z < n; ++z)
        if ((u >> z) & 1) {
          row.emplace_back(x * n + z, 1);
          row.emplace_back(y * n + z, -1);
        }
      if (!row.empty()) lp.add_row(row, LinearProgram::Rel::Le, 0);
    }
  std::vector<Rat> q = averaged_vertices(lp, rng);
  std::vector<RationalMeasure> family;
  for (int x = 0; x < n; ++x) {
    RationalMeasure m{p, std::vector<Rat>(n, 0)};
    for (int y = 0; y < n; ++y) m.mass[y] = q[x * n + y];
    family.push_back(std::move(m));
  }
  return make_system(p, p, std::move(family));
}

std::pair<RationalMeasure, RationalMeasure> random_ordered_pair(const Poset& p,
                                                                RandomSource& rng) {
  int n = p.size();
  LinearProgram lp;
  for (int i = 0; i < 2 * n; ++i) lp.add_var(true);
  for (int side = 0; side < 2; ++side) {
    std::vector<std::pair<int, Rat>> row;
    for (int y = 0; y < n; ++y) row.emplace_back(side * n + y, 1);
    lp.add_row(row, LinearProgram::Rel::Eq, 1);
  }
  for (Mask u : p.up_sets()) {
    std::vector<std::pair<int, Rat>> row;
    for (int y = 0; y < n; ++y)
      if ((u >> y) & 1) {
        row.emplace_back(y, 1);
        row.emplace_back(n + y, -1);
      }
    if (!row.empty()) lp.add_row(row, LinearProgram::Rel::Le, 0);
  }
  std::vector<Rat> q = averaged_vertices(lp, rng);
  RationalMeasure p1{p, std::vector<Rat>(n, 0)}, p2{p, std::vector<Rat>(n, 0)};
  for (int y = 0; y < n; ++y) {
    p1.mass[y] = q[y];
    p2.mass[y] = q[n + y];
  }
  return {std::move(p1), std::move(p2)};
}

Generator random_generator(const Poset& p, RandomSource& rng) {
  int n = p.size();
  if (n < 2) fail(Errc::BadIndex, "generators need at least two states");
  std::vector<std::vector<Rat>> rates(n, std::vector<Rat>(n, 0));
  bool any = false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || rng.uniform(0, 1) == 0) continue;
      rates[x][y] = rat(rng.uniform(1, 4), rng.uniform(1, 3));
      any = true;
    }
  if (!any) rates[0][1] = 1;
  return Generator(p, std::move(rates));
}

namespace {

Poset random_tree(int n, RandomSource& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int k = 1; k < n; ++k) {
    std::string other = names[rng.uniform(0, k - 1)];
    if (rng.uniform(0, 1) == 0)
      covers.emplace_back(other, names[k]);
    else
      covers.emplace_back(names[k], other);
  }
  return Poset::from_cover_edges(names, covers);
}

}  // namespace

Poset random_w_class_poset(int n, RandomSource& rng) {
  for (int tries = 0; tries < 500; ++tries) {
    Poset p = random_tree(n, rng);
    if (is_w_class(p)) return p;
  }
  // Chains are always W-class; a safe fallback for stubborn draws.
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    if (i) covers.emplace_back(names[i - 1], names[i]);
  }
  return Poset::from_cover_edges(names, covers);
}

Poset random_w_glued_diamond(int n, RandomSource& rng) {
  if (n < 4) fail(Errc::BadIndex, "a glued diamond needs at least four elements");
  std::vector<std::string> names{"a", "b", "c", "d"};
  std::vector<std::pair<std::string, std::string>> covers{
      {"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}};
  Poset p = Poset::from_cover_edges(names, covers);
  while (static_cast<int>(names.size()) < n) {
    bool attached = false;
    for (int tries = 0; tries < 80 && !attached; ++tries) {
      std::string fresh = "t" + std::to_string(names.size() - 4);
      std::string other = names[rng.uniform(0, static_cast<int>(names.size()) - 1)];
      auto next_covers = covers;
      if (rng.uniform(0, 1) == 0)
        next_covers.emplace_back(other, fresh);
      else
        next_covers.emplace_back(fresh, other);
      auto next_names = names;
      next_names.push_back(fresh);
      Poset cand = Poset::from_cover_edges(next_names, next_covers);
      if (is_w_glued_diamond(cand)) {
        names = std::move(next_names);
        covers = std::move(next_covers);
        p = std::move(cand);
        attached = true;
      }
    }
    if (!attached) break;  // saturated early; still a valid host
  }
  return p;
}

}  // namespace monoteq
