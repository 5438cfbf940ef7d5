#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/patterns.hpp"
#include "monoteq/poset.hpp"

using namespace monoteq;
using namespace testing_oracles;

TEST_CASE("cover construction and derived relations") {
  Poset p = Poset::from_cover_edges({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(p.size() == 4);
  CHECK(p.leq("a", "d"));
  CHECK(p.leq("a", "a"));
  CHECK(!p.leq("b", "c"));
  CHECK(!p.leq("d", "a"));
  CHECK(p.is_cover(p.index_of("a"), p.index_of("b")));
  CHECK(!p.is_cover(p.index_of("a"), p.index_of("d")));
  CHECK(p.cover_count() == 4);
  CHECK(p.connected());
  CHECK(p.minimal_elements() == (Mask{1} << p.index_of("a")));
  CHECK(p.maximal_elements() == (Mask{1} << p.index_of("d")));
}

TEST_CASE("redundant covers and cycles are rejected") {
  CHECK_THROWS_AS(Poset::from_cover_edges({"a", "b", "c"},
                                          {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                  Error);
  CHECK_THROWS_AS(Poset::from_cover_edges({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  Error);
  CHECK_THROWS_AS(Poset::from_cover_edges({"a"}, {{"a", "x"}}), Error);
}

TEST_CASE("induced subposets recompute the Hasse diagram") {
  Poset chain = patterns::chain(3);
  Poset sub = chain.induced(std::vector<std::string>{"c0", "c2"});
  CHECK(sub.size() == 2);
  CHECK(sub.leq("c0", "c2"));
  CHECK(sub.cover_count() == 1);  // c0 < c2 becomes a cover
}

TEST_CASE("duality") {
  Poset y = patterns::y_poset();
  Poset yd = y.dual();
  for (int i = 0; i < y.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      CHECK(y.leq(i, j) == yd.leq(j, i));
  CHECK(is_isomorphic(y.dual().dual(), y));
}

TEST_CASE("linear extension respects the order") {
  for (const Poset& p : connected_posets(5)) {
    std::vector<int> ext = p.linear_extension();
    std::vector<int> place(p.size());
    for (int k = 0; k < p.size(); ++k) place[ext[k]] = k;
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (i != j && p.leq(i, j)) CHECK(place[i] < place[j]);
  }
}

TEST_CASE("up-set enumeration matches subset filtering") {
  for (const Poset& p : connected_posets(4)) {
    std::vector<Mask> got = p.up_sets();
    std::vector<Mask> want;
    for (Mask u = 0; u <= p.all(); ++u)
      if (p.is_up_set(u)) want.push_back(u);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
}

TEST_CASE("induced-pattern search agrees with the injection oracle") {
  std::vector<Poset> patterns_list = {patterns::diamond(), patterns::bowtie(),
                                      patterns::y_poset(), patterns::s1()};
  for (const Poset& host : connected_posets(5))
    for (const Poset& pat : patterns_list)
      CHECK(has_induced(host, pat) == induced_oracle(host, pat));
}

TEST_CASE("monotone maps agree with full function enumeration") {
  Poset a = patterns::chain(3);
  Poset s = patterns::diamond();
  std::vector<MonotoneMap> maps = monotone_maps(a, s);
  int count = 0;
  std::vector<int> h(a.size(), 0);
  while (true) {
    if (is_monotone(a, s, h)) ++count;
    int k = 0;
    while (k < a.size() && ++h[k] == s.size()) h[k++] = 0;
    if (k == a.size()) break;
  }
  CHECK(static_cast<int>(maps.size()) == count);
  for (const MonotoneMap& m : maps) CHECK(is_monotone(a, s, m.assignment));
  CHECK(std::is_sorted(maps.begin(), maps.end()));
}

TEST_CASE("gluing two posets at one shared element") {
  Poset c1 = Poset::from_cover_edges({"a", "b", "m"}, {{"a", "b"}, {"b", "m"}});
  Poset c2 = Poset::from_cover_edges({"m", "x"}, {{"m", "x"}});
  Poset g = glue(c1, c2, "m");
  CHECK(g.size() == 4);
  CHECK(g.leq("a", "x"));
  CHECK(!g.leq("x", "a"));
}

TEST_CASE("rooted tree sections") {
  Poset p = Poset::from_cover_edges({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "d"}, {"c", "d"}});
  RootedTree t(p, "d");
  CHECK(t.parent(p.index_of("d")) == -1);
  CHECK(t.parent(p.index_of("a")) == p.index_of("b"));
  CHECK(t.tree_leq(p.index_of("a"), p.index_of("b")));
  CHECK(t.section_closed(p.index_of("d")) == p.all());
  CHECK(t.closed_section_is_down_set(p.index_of("a")));
  // Rooting at a non-extreme element is rejected.
  CHECK_THROWS_AS(RootedTree(p, "b"), Error);
}

TEST_CASE("connected poset counts match the published sequence") {
  const int expect[] = {1, 1, 3, 10, 44, 238};
  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<int>(connected_posets(n).size()) == expect[n - 1]);
}
