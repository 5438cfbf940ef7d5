#include "doctest.h"
#include "monoteq/io.hpp"
#include "monoteq/patterns.hpp"

using namespace monoteq;

TEST_CASE("poset files round-trip") {
  std::string text =
      "# the diamond\n"
      "elements: a b c d\n"
      "a < b\n"
      "a < c\n"
      "b < d\n"
      "c < d\n";
  Poset p = parse_poset(text);
  CHECK(p.same_order_as(patterns::diamond()));
  CHECK(parse_poset(format_poset(p)).same_order_as(p));
}

TEST_CASE("system files round-trip and bind to the support") {
  Poset p = patterns::diamond();
  std::string text =
      "a: a=1/2 b=1/4 c=1/4\n"
      "d: d=1\n";
  MeasureSystem s = parse_system(text, p);
  CHECK(s.index.size() == 2);
  CHECK(s.index.leq("a", "d"));
  CHECK(s.family[s.index.index_of("a")].mass[p.index_of("b")] == Rat(1, 4));
  MeasureSystem again = parse_system(format_system(s), p);
  for (int a = 0; a < s.index.size(); ++a)
    for (int y = 0; y < p.size(); ++y)
      CHECK(again.family[a].mass[y] == s.family[a].mass[y]);
}

TEST_CASE("generator files round-trip including the order") {
  std::string text =
      "states: lo mid hi\n"
      "lo < mid\n"
      "mid < hi\n"
      "lo: mid=1\n"
      "mid: lo=1/2 hi=1/2\n"
      "hi: mid=2\n";
  Generator l = parse_generator(text);
  CHECK(l.states().leq("lo", "hi"));
  CHECK(l.lambda_star() == 2);
  Generator again = parse_generator(format_generator(l));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(again.rate(x, y) == l.rate(x, y));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_poset("elements: a b\nnonsense\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_measures("x: a=0.5\n", patterns::chain(2)),
                       doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(
      parse_generator("states: a b\na: a=1\n"),
      doctest::Contains("diagonal"), Error);
}

TEST_CASE("rational serialization is canonical") {
  CHECK(rat_str(rat(2, 4)) == "1/2");
  CHECK(rat_str(Rat(3)) == "3");
  CHECK(rat_str(rat(-3, 6)) == "-1/2");
  CHECK(rat_parse("7/21") == Rat(1, 3));
  CHECK_THROWS_AS(rat_parse("0.5"), Error);
}
