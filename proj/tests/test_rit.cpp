#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/patterns.hpp"
#include "monoteq/rit.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("plane-tree decomposition covers the tree with disjoint paths") {
  Poset p = Poset::from_cover_edges(
      {"a", "b", "d", "r", "s", "t"},
      {{"a", "b"}, {"b", "d"}, {"s", "b"}, {"t", "s"}, {"r", "s"}});
  RootedTree rt(p, "d");
  PlaneTree k(rt);
  Mask covered = 0;
  for (int node = 0; node < k.size(); ++node) {
    for (int v : k.node(node).path) {
      CHECK((covered & (Mask{1} << v)) == 0);
      covered |= Mask{1} << v;
    }
    // Children are listed in canonical (ascending element index) order.
    const auto& ch = k.node(node).children;
    for (size_t i = 1; i < ch.size(); ++i) CHECK(k.u1(ch[i - 1]) < k.u1(ch[i]));
  }
  CHECK(covered == p.all());
  CHECK(k.u1(k.root()) == rt.root());
}

TEST_CASE("inverse transform on a chain is the classical construction") {
  Poset c = patterns::chain(3);
  RationalMeasure m{c, {Rat(1, 6), Rat(1, 3), Rat(1, 2)}};
  RootedTree rt(c, "c2");
  PlaneTree k(rt);
  DistributionFunction f = distribution_function(m, rt);
  InterlacedDistribution mu = interlaced_mu(f, f, k);
  InverseTransform x = build_rit(k, mu, f.f);
  CHECK(x.total() == 1);
  CHECK(x.value_at(Rat(1, 12)) == c.index_of("c0"));
  CHECK(x.value_at(Rat(1, 4)) == c.index_of("c1"));
  CHECK(x.value_at(Rat(3, 4)) == c.index_of("c2"));
  for (int y = 0; y < 3; ++y) CHECK(x.length_where(y) == m.mass[y]);
}

TEST_CASE("transform surgery replaces exactly the requested segments") {
  Poset c = patterns::chain(2);
  InverseTransform x{c, {{0, Rat(1, 2), 0}, {Rat(1, 2), 1, 1}}};
  x.replace({{Rat(1, 4), Rat(1, 2)}}, 0, 1);
  CHECK(x.length_where(1) == Rat(3, 4));
  CHECK_THROWS_AS(x.replace({{0, Rat(1, 2)}}, 0, 1), Error);
}

TEST_CASE("W-class realization: exact, monotone, with the closed-form preimage") {
  RandomSource rng(51);
  int done = 0;
  while (done < 40) {
    Poset support = random_w_class_poset(rng.uniform(2, 7), rng);
    Poset index = rng.uniform(0, 1) ? chain_index() : patterns::diamond();
    MeasureSystem s = random_indexed_system(index, support, rng);
    WClassRealization w = w_class_realize(s);
    ++done;
    CHECK(transforms_realize(w.transforms, s));
    CHECK(transforms_monotone(w.transforms, s.index));
    // The recursion's u_*-preimage must match the closed form at every
    // node, checked on the bottom row's transform rebuilt locally.
    for (int a = 0; a < s.index.size(); ++a) {
      DistributionFunction f = distribution_function(
          s.family[a], w.plane.tree());
      for (int node = 0; node < w.plane.size(); ++node) {
        InverseTransform local = build_rit_node(w.plane, w.mu, f.f, node);
        CHECK(local.preimage(w.plane.u_star(node)) ==
              u_star_preimage(w.plane, w.mu, f.f, node));
      }
    }
  }
}

TEST_CASE("reading transforms back as a map distribution is exact") {
  RandomSource rng(52);
  Poset support = random_w_class_poset(5, rng);
  MeasureSystem s = random_indexed_system(chain_index(), support, rng);
  WClassRealization w = w_class_realize(s);
  MapDistribution d = transforms_to_map_distribution(s.index, w.transforms);
  CHECK(d.realizes(s));
  for (const MonotoneMap& h : d.maps)
    CHECK(is_monotone(d.index, d.support, h.assignment));
}
