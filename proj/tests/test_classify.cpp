#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/classify.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/markov.hpp"
#include "monoteq/patterns.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("named patterns land in the expected classes") {
  CHECK(verdict(patterns::chain(4)).kind == Verdict::Kind::Acyclic);
  CHECK(verdict(patterns::y_poset()).kind == Verdict::Kind::Acyclic);
  CHECK(verdict(patterns::w_poset()).kind == Verdict::Kind::Acyclic);
  CHECK(verdict(patterns::bowtie()).kind == Verdict::Kind::YGluedBipartite);
  CHECK(verdict(patterns::diamond()).kind == Verdict::Kind::WGluedDiamond);
  CHECK(verdict(patterns::s1()).kind == Verdict::Kind::Fails);
  CHECK(verdict(patterns::s4_hat()).kind == Verdict::Kind::Fails);
  CHECK(verdict(patterns::crown(3)).kind == Verdict::Kind::Fails);
}

TEST_CASE("the verdict is a partition of the predicates") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : connected_posets(n)) {
      Verdict v = verdict(p);
      bool acyclic = is_acyclic(p);
      bool ygb = is_y_glued_bipartite(p);
      bool wgd = is_w_glued_diamond(p);
      switch (v.kind) {
        case Verdict::Kind::Acyclic:
          CHECK(acyclic);
          CHECK(!ygb);
          CHECK(!wgd);
          break;
        case Verdict::Kind::YGluedBipartite:
          CHECK(!acyclic);
          CHECK(ygb);
          CHECK(!wgd);
          break;
        case Verdict::Kind::WGluedDiamond:
          CHECK(!acyclic);
          CHECK(!ygb);
          CHECK(wgd);
          break;
        case Verdict::Kind::Fails:
          CHECK(!acyclic);
          CHECK(!ygb);
          CHECK(!wgd);
          CHECK(!v.reason.empty());
          break;
      }
      CHECK(ct_equivalence(p) == (v.kind != Verdict::Kind::Fails));
    }
}

TEST_CASE("maximal bipartite pairs really are maximal and complete") {
  for (const Poset& p : connected_posets(5))
    for (const BipartitePair& pair : maximal_bipartites(p)) {
      CHECK(popcount(pair.lower) >= 2);
      CHECK(popcount(pair.upper) >= 2);
      for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
          if (((pair.lower >> x) & 1) && ((pair.upper >> y) & 1))
            CHECK(p.is_cover(x, y));
    }
}

TEST_CASE("the extension step removes the bipartite and inserts a midpoint") {
  Poset p = patterns::bowtie();
  auto pairs = maximal_bipartites(p);
  REQUIRE(pairs.size() == 1);
  ExtSplit ext = algorithm_ext(p, pairs[0]);
  CHECK(ext.s_hat.size() == p.size() + 1);
  int c = ext.s_hat.index_of(ext.c_name);
  for (int x = 0; x < p.size(); ++x) {
    int hx = ext.s_hat.index_of(p.name(x));
    if ((pairs[0].lower >> x) & 1) CHECK(ext.s_hat.leq(hx, c));
    if ((pairs[0].upper >> x) & 1) CHECK(ext.s_hat.leq(c, hx));
  }
  CHECK(is_acyclic(ext.s_hat));
}

TEST_CASE("acyclic-extension decision agrees with the bounded oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : connected_posets(n))
      CHECK(has_acyclic_extension(p) == acyclic_extension_oracle(p));
}

TEST_CASE("W-glued structure components partition the host") {
  RandomSource rng(21);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_w_glued_diamond(rng.uniform(4, 9), rng);
    auto ws = w_glued_structure(p);
    REQUIRE(ws.has_value());
    Mask all = ws->comp_a | ws->comp_b | ws->comp_c | ws->comp_d;
    CHECK(all == p.all());
    CHECK((ws->comp_a & ws->comp_b) == 0);
    CHECK((ws->comp_a & ws->comp_c) == 0);
    CHECK((ws->comp_a & ws->comp_d) == 0);
    CHECK((ws->comp_b & ws->comp_c) == 0);
    CHECK((ws->comp_b & ws->comp_d) == 0);
    CHECK((ws->comp_c & ws->comp_d) == 0);
    CHECK(p.is_cover(ws->a, ws->b));
    CHECK(p.is_cover(ws->a, ws->c));
    CHECK(p.is_cover(ws->b, ws->d));
    CHECK(p.is_cover(ws->c, ws->d));
  }
}

TEST_CASE("random W-class posets satisfy the class predicate") {
  RandomSource rng(22);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_w_class_poset(rng.uniform(2, 7), rng);
    CHECK(is_w_class(p));
    CHECK(p.connected());
  }
}
