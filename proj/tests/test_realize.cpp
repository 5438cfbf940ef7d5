#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/patterns.hpp"
#include "monoteq/realize.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("acyclic realization is exact and monotone") {
  RandomSource rng(41);
  for (int t = 0; t < 40; ++t) {
    Poset p = random_w_class_poset(rng.uniform(2, 6), rng);
    MeasureSystem s = random_monotone_kernel(p, rng);
    MapDistribution d = realize_acyclic(s);
    CHECK(d.realizes(s));
    for (const MonotoneMap& h : d.maps) CHECK(is_monotone(d.index, d.support, h.assignment));
    for (const Rat& w : d.weight) CHECK(w > 0);
    for (int a = 0; a < p.size(); ++a) {
      RationalMeasure m = d.marginal(a);
      for (int y = 0; y < p.size(); ++y) CHECK(m.mass[y] == s.family[a].mass[y]);
    }
  }
}

TEST_CASE("LP realization certifies the acyclic construction") {
  RandomSource rng(42);
  for (int t = 0; t < 10; ++t) {
    Poset p = random_w_class_poset(4, rng);
    MeasureSystem s = random_monotone_kernel(p, rng);
    auto d = is_realizably_monotone(s);
    REQUIRE(d.has_value());
    CHECK(d->realizes(s));
    CHECK(max_theta(s) == 1);
  }
}

TEST_CASE("max_theta accepts the identity kernel in full") {
  Poset p = patterns::diamond();
  auto row = [&](std::initializer_list<std::pair<const char*, Rat>> masses) {
    RationalMeasure m{p, std::vector<Rat>(4, 0)};
    for (auto& [name, v] : masses) m.mass[p.index_of(name)] = v;
    return m;
  };
  MeasureSystem ident = make_system(
      p, p,
      {row({{"a", 1}}), row({{"b", 1}}), row({{"c", 1}}), row({{"d", 1}})});
  CHECK(max_theta(ident) == 1);
}

TEST_CASE("pair couplings match the stochastic order exactly") {
  RandomSource rng(43);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Poset> ps = connected_posets(n);
    for (int t = 0; t < 30; ++t) {
      const Poset& p = ps[rng.uniform(0, static_cast<int>(ps.size()) - 1)];
      RationalMeasure m1 = random_measure(p, rng);
      RationalMeasure m2 = random_measure(p, rng);
      if (m1.total() != m2.total()) continue;
      auto c = strassen_lp(m1, m2);
      CHECK(c.has_value() == stoch_leq(m1, m2));
      if (c) {
        RationalMeasure f = c->first_marginal(), s = c->second_marginal();
        for (int y = 0; y < p.size(); ++y) {
          CHECK(f.mass[y] == m1.mass[y]);
          CHECK(s.mass[y] == m2.mass[y]);
        }
        for (int x = 0; x < p.size(); ++x)
          for (int y = 0; y < p.size(); ++y)
            if (c->weight[x][y] != 0) CHECK(p.leq(x, y));
      }
    }
  }
}

TEST_CASE("gluing realizations preserves both marginal families") {
  RandomSource rng(44);
  Poset left = Poset::from_cover_edges({"a", "b", "m"}, {{"a", "m"}, {"b", "m"}});
  Poset right = Poset::from_cover_edges({"m", "x", "y"}, {{"m", "x"}, {"x", "y"}});
  Poset whole = glue(left, right, "m");
  MeasureSystem s = random_monotone_kernel(whole, rng);
  MapDistribution d = realize_acyclic(s);
  CHECK(d.realizes(s));
}
