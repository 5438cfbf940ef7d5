#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/markov.hpp"
#include "monoteq/patterns.hpp"

using namespace monoteq;
using namespace testing_oracles;

namespace {

Generator chain_walk() {
  Poset p = patterns::chain(3);
  std::vector<std::vector<Rat>> rates(3, std::vector<Rat>(3, 0));
  rates[0][1] = 1;
  rates[1][0] = Rat(1, 2);
  rates[1][2] = Rat(1, 2);
  rates[2][1] = 1;
  return Generator(p, std::move(rates));
}

}  // namespace

TEST_CASE("generator recomputes the diagonal and the exit rates") {
  Generator l = chain_walk();
  CHECK(l.rate(0, 0) == -1);
  CHECK(l.rate(1, 1) == -1);
  CHECK(l.lambda_star() == 1);
  CHECK(l.rate_into(0, Mask{0b110}) == 1);
}

TEST_CASE("uniformized kernels are stochastic and consistent") {
  Generator l = chain_walk();
  TransitionKernel q = uniformize(l, 2);
  for (int x = 0; x < 3; ++x) {
    Rat sum = 0;
    for (int y = 0; y < 3; ++y) {
      sum += q.q[x][y];
      CHECK(q.q[x][y] >= 0);
      if (x != y) CHECK(q.q[x][y] == l.rate(x, y) / 2);
    }
    CHECK(sum == 1);
  }
  CHECK_THROWS_AS(uniformize(l, Rat(1, 2)), Error);
}

TEST_CASE("rate criterion matches uniformized monotonicity on random generators") {
  RandomSource rng(31);
  int monotone = 0;
  for (int t = 0; t < 120; ++t) {
    int n = rng.uniform(2, 5);
    std::vector<Poset> ps = connected_posets(n);
    const Poset& p = ps[rng.uniform(0, static_cast<int>(ps.size()) - 1)];
    Generator l = random_generator(p, rng);
    bool by_rates = massey_check(l);
    bool by_kernel = kernel_is_stoch_monotone(uniformize(l, 2 * l.lambda_star()));
    CHECK(by_rates == by_kernel);
    CHECK(sm_continuous(l) == by_rates);
    if (by_rates) ++monotone;
  }
  // The sample must exercise both outcomes to mean anything.
  CHECK(monotone > 0);
  CHECK(monotone < 120);
}

TEST_CASE("decomposition reconstructs every off-diagonal rate") {
  Generator l = chain_walk();
  auto d = decompose_generator(l);
  REQUIRE(d.has_value());
  const Poset& p = l.states();
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      Rat sum = 0;
      for (size_t i = 0; i < d->maps.size(); ++i)
        if (d->maps[i].assignment[x] == y) sum += d->gamma[i];
      CHECK(sum == l.rate(x, y));
    }
  for (const Rat& g : d->gamma) CHECK(g >= 0);
  // No identity map in the support.
  for (const MonotoneMap& h : d->maps) {
    bool ident = true;
    for (int x = 0; x < p.size(); ++x) ident = ident && h.assignment[x] == x;
    CHECK(!ident);
  }
}

TEST_CASE("decomposability implies the rate criterion, never conversely") {
  RandomSource rng(32);
  for (int t = 0; t < 60; ++t) {
    int n = rng.uniform(2, 4);
    std::vector<Poset> ps = connected_posets(n);
    const Poset& p = ps[rng.uniform(0, static_cast<int>(ps.size()) - 1)];
    Generator l = random_generator(p, rng);
    if (decompose_generator(l)) CHECK(massey_check(l));
  }
}

TEST_CASE("path simulation is seed-deterministic and starts at the origin") {
  Generator l = chain_walk();
  auto a = simulate_path(l, "c0", 5.0, 99);
  auto b = simulate_path(l, "c0", 5.0, 99);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].time == b[i].time);
    CHECK(a[i].state == b[i].state);
  }
  REQUIRE(!a.empty());
  CHECK(a[0].time == 0.0);
  CHECK(a[0].state == "c0");
}
