#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/fixtures.hpp"
#include "monoteq/glued.hpp"
#include "monoteq/patterns.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("bipartite extension scales rows and stays monotone") {
  RandomSource rng(61);
  Poset p = patterns::bowtie();
  for (int t = 0; t < 15; ++t) {
    MeasureSystem s = random_monotone_kernel(p, rng);
    BipartiteExtension ext = extend_bipartite(s);
    CHECK(ext.theta > 0);
    CHECK(ext.theta <= 1);
    CHECK(system_is_stoch_monotone(ext.extended));
    const Poset& hat = ext.split.s_hat;
    int c = hat.index_of(ext.split.c_name);
    for (int x = 0; x < hat.size(); ++x) {
      if (x == c) continue;
      int src = p.index_of(hat.name(x));
      // Original rows are theta-scaled with the identity topped up.
      for (int y = 0; y < hat.size(); ++y) {
        if (y == c) continue;
        Rat want = ext.theta * s.family[src].mass[p.index_of(hat.name(y))];
        if (y == x) want += 1 - ext.theta;
        CHECK(ext.extended.family[x].mass[y] == want);
      }
      CHECK(ext.extended.family[x].mass[c] == 0);
    }
  }
}

TEST_CASE("Y-glued realization realizes the weak combination") {
  RandomSource rng(62);
  Poset p = patterns::bowtie();
  for (int t = 0; t < 10; ++t) {
    MeasureSystem s = random_monotone_kernel(p, rng);
    YGluedRealization y = y_glued_realize(s);
    MeasureSystem target = weak_combination(s, y.theta);
    CHECK(y.law.realizes(target));
    for (const MonotoneMap& h : y.law.maps)
      CHECK(is_monotone(p, p, h.assignment));
  }
}

TEST_CASE("diamond split recombines to P plus the theta_star identity") {
  RandomSource rng(63);
  Poset p = patterns::diamond();
  int done = 0;
  for (int t = 0; t < 120 && done < 15; ++t) {
    MeasureSystem full = random_monotone_kernel(p, rng);
    if (full.family[p.index_of("a")].mass[p.index_of("d")] != 0) continue;
    if (full.family[p.index_of("d")].mass[p.index_of("a")] != 0) continue;
    ++done;
    DiamondDecomposition dd = w_glued_split(full);
    CHECK(dd.q_tilde == dd.qp + dd.qpp);
    CHECK(dd.theta * dd.theta_star == 0);
    for (int a = 0; a < 4; ++a) {
      for (int y = 0; y < 4; ++y) {
        Rat want = full.family[a].mass[y];
        if (a == y) want += dd.theta_star;
        CHECK(dd.transforms[a].length_where(y) == want);
      }
    }
    CHECK(transforms_monotone(dd.transforms, full.index));
  }
  CHECK(done > 0);
}

TEST_CASE("W-glued realization is exact and certified map-by-map") {
  RandomSource rng(64);
  for (int t = 0; t < 12; ++t) {
    Poset host = random_w_glued_diamond(rng.uniform(4, 8), rng);
    MeasureSystem s = random_monotone_kernel(host, rng);
    WGluedRealization w = w_glued_realize(s);
    // Diamond transforms realize P_alpha + theta_star * I_alpha.
    const Poset& di = w.diamond_index;
    for (int a = 0; a < di.size(); ++a) {
      int xa = host.index_of(di.name(a));
      for (int y = 0; y < host.size(); ++y) {
        Rat want = s.family[xa].mass[y];
        if (y == xa) want += w.theta_star;
        CHECK(w.diamond_transforms[a].length_where(y) == want);
      }
    }
    CHECK(transforms_monotone(w.diamond_transforms, di));
    // The full law is a feasible point of the weak-realization program.
    CHECK(w.theta_weak > 0);
    CHECK(w.theta_weak <= 1);
    MeasureSystem target = weak_combination(s, w.theta_weak);
    CHECK(w.law.realizes(target));
    for (const MonotoneMap& h : w.law.maps)
      CHECK(is_monotone(host, host, h.assignment));
  }
}

TEST_CASE("ordered transforms on glued diamonds: exact marginals, pointwise order") {
  RandomSource rng(65);
  for (int t = 0; t < 25; ++t) {
    Poset host = random_w_glued_diamond(rng.uniform(4, 8), rng);
    auto [p1, p2] = random_ordered_pair(host, rng);
    auto [x1, x2] = strassen_w_glued(p1, p2);
    for (int y = 0; y < host.size(); ++y) {
      CHECK(x1.length_where(y) == p1.mass[y]);
      CHECK(x2.length_where(y) == p2.mass[y]);
    }
    CHECK(pointwise_leq(x1, x2));
  }
}

TEST_CASE("unordered pairs are rejected with a witness") {
  Poset p = patterns::diamond();
  RationalMeasure lo{p, std::vector<Rat>(4, 0)}, hi = lo;
  lo.mass[p.index_of("d")] = 1;
  hi.mass[p.index_of("a")] = 1;
  CHECK_THROWS_AS(strassen_w_glued(lo, hi), Error);
}

TEST_CASE("every fixture is stochastically monotone") {
  for (const Fixture& f : all_fixtures()) {
    CAPTURE(f.tag);
    CHECK(system_is_stoch_monotone(f.system));
    CHECK(verdict(f.system.support).kind == Verdict::Kind::Fails);
  }
}

TEST_CASE("full-kernel extension of a diamond system preserves monotonicity") {
  // On a host where every non-corner element is below the bottom row's
  // reach or above a middle, the extension rule applies cleanly.
  Fixture f = fixture_second_cycle(2);
  if (!f.system.index.same_order_as(f.system.support)) {
    MeasureSystem full = extend_to_full(f.system);
    CHECK(system_is_stoch_monotone(full));
    CHECK(full.index.same_order_as(full.support));
  }
}
