#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/patterns.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("stochastic order agrees with the subset-filter oracle") {
  RandomSource rng(11);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Poset> posets = connected_posets(n);
    for (int t = 0; t < 40; ++t) {
      const Poset& p = posets[rng.uniform(0, static_cast<int>(posets.size()) - 1)];
      RationalMeasure m1 = random_measure(p, rng);
      RationalMeasure m2 = random_measure(p, rng);
      bool lib = stoch_leq(m1, m2);
      CHECK(lib == stoch_leq_oracle(m1, m2));
      Mask w = stoch_leq_witness(m1, m2);
      if (lib) {
        CHECK(w == 0);
      } else {
        CHECK(p.is_up_set(w));
        CHECK(m1.mass_of(w) > m2.mass_of(w));
      }
    }
  }
}

TEST_CASE("ordered-pair sampler produces ordered pairs") {
  RandomSource rng(12);
  Poset p = patterns::diamond();
  for (int t = 0; t < 25; ++t) {
    auto [p1, p2] = random_ordered_pair(p, rng);
    CHECK(p1.total() == 1);
    CHECK(p2.total() == 1);
    CHECK(stoch_leq_oracle(p1, p2));
  }
}

TEST_CASE("monotone-kernel sampler is stochastically monotone") {
  RandomSource rng(13);
  for (const Poset& p : connected_posets(4)) {
    MeasureSystem s = random_monotone_kernel(p, rng);
    CHECK(system_is_stoch_monotone(s));
    for (const RationalMeasure& m : s.family) CHECK(m.total() == 1);
  }
}

TEST_CASE("weak combination mixes toward the identity") {
  RandomSource rng(14);
  Poset p = patterns::diamond();
  MeasureSystem s = random_monotone_kernel(p, rng);
  Rat theta(1, 3);
  MeasureSystem w = weak_combination(s, theta);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      Rat want = theta * s.family[x].mass[y];
      if (x == y) want += 1 - theta;
      CHECK(w.family[x].mass[y] == want);
    }
}

TEST_CASE("distribution function on a chain is the cumulative sum") {
  Poset c = patterns::chain(4);
  RationalMeasure m{c, {Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 8)}};
  RootedTree t(c, "c3");
  DistributionFunction f = distribution_function(m, t);
  Rat run = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(f.f_minus[i] == run);
    run += m.mass[i];
    CHECK(f.f[i] == run);
  }
  CHECK(f.total() == 1);
}

TEST_CASE("distribution-function order matches stochastic order on trees") {
  RandomSource rng(15);
  Poset p = Poset::from_cover_edges({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "d"}, {"c", "d"}});
  RootedTree t(p, "d");
  for (int k = 0; k < 30; ++k) {
    RationalMeasure m1 = random_measure(p, rng);
    RationalMeasure m2 = random_measure(p, rng);
    if (m1.total() != m2.total()) continue;
    DistributionFunction f1 = distribution_function(m1, t);
    DistributionFunction f2 = distribution_function(m2, t);
    // On a tree whose closed sections are all up- or down-sets, the
    // sectionwise order is implied by the stochastic order.
    if (stoch_leq(m1, m2)) CHECK(df_stoch_leq(f1, f2));
  }
}

TEST_CASE("system construction validates its inputs") {
  Poset p = patterns::chain(2);
  RationalMeasure good{p, {Rat(1, 2), Rat(1, 2)}};
  RationalMeasure bad{p, {Rat(-1, 2), Rat(3, 2)}};
  CHECK_THROWS_AS(make_system(p, p, {good, bad}), Error);
  CHECK_THROWS_AS(make_system(p, p, {good}), Error);
}
