#include "monoteq/fixtures.hpp"

#include <map>

#include "monoteq/error.hpp"

namespace monoteq {

namespace {

/// coef * (sum of unit masses at the named elements).
RationalMeasure spread(const Poset& p, const Rat& coef,
                       const std::vector<std::string>& names) {
  RationalMeasure m{p, std::vector<Rat>(p.size(), 0)};
  for (const std::string& n : names) m.mass[p.index_of(n)] += coef;
  return m;
}

/// Assemble a full-kernel system from a name-keyed row table.
MeasureSystem full_kernel(const Poset& p,
                          const std::map<std::string, RationalMeasure>& rows) {
  std::vector<RationalMeasure> family;
  for (int x = 0; x < p.size(); ++x) family.push_back(rows.at(p.name(x)));
  return make_system(p, p, std::move(family));
}

/// Assemble a diamond-indexed system: the index is the induced subposet
/// on {a, b, c, d}, rows given bottom / middles / top.
MeasureSystem diamond_system(const Poset& host, RationalMeasure pa, RationalMeasure pb,
                             RationalMeasure pc, RationalMeasure pd) {
  Poset index = host.induced(std::vector<std::string>{"a", "b", "c", "d"});
  std::map<std::string, RationalMeasure> rows{
      {"a", std::move(pa)}, {"b", std::move(pb)}, {"c", std::move(pc)},
      {"d", std::move(pd)}};
  std::vector<RationalMeasure> family;
  for (int x = 0; x < index.size(); ++x) family.push_back(rows.at(index.name(x)));
  return make_system(std::move(index), host, std::move(family));
}

Rat half() { return Rat(1) / 2; }
Rat third() { return Rat(1) / 3; }

}  // namespace

Fixture fixture_bipartite_violation(int variant) {
  if (variant == 0) {
    Poset p = Poset::from_cover_edges(
        {"a1", "a2", "b1", "b2", "e", "f", "g"},
        {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
         {"e", "a2"}, {"f", "a2"}, {"e", "g"}, {"f", "g"}});
    std::map<std::string, RationalMeasure> rows{
        {"a1", spread(p, third(), {"e", "f", "b2"})},
        {"a2", spread(p, third(), {"e", "f", "g"})},
        {"b1", spread(p, third(), {"f", "g", "b2"})},
        {"b2", spread(p, third(), {"e", "g", "b2"})},
        {"e", spread(p, half(), {"e", "f"})},
        {"f", spread(p, half(), {"e", "f"})},
        {"g", spread(p, half(), {"e", "f"})}};
    return {"bipartite-upper", full_kernel(p, rows)};
  }
  if (variant == 1) {
    Poset p = Poset::from_cover_edges(
        {"a1", "a2", "b1", "b2", "e", "f", "g", "h"},
        {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
         {"e", "g"}, {"e", "h"}, {"f", "g"}, {"f", "h"},
         {"g", "a2"}, {"h", "a2"}});
    std::map<std::string, RationalMeasure> rows{
        {"a1", spread(p, third(), {"e", "f", "h"})},
        {"a2", spread(p, third(), {"e", "f", "g"})},
        {"b1", spread(p, third(), {"f", "g", "h"})},
        {"b2", spread(p, third(), {"e", "g", "h"})},
        {"e", spread(p, half(), {"e", "f"})},
        {"f", spread(p, half(), {"e", "f"})},
        {"g", spread(p, half(), {"e", "f"})},
        {"h", spread(p, half(), {"e", "f"})}};
    return {"bipartite-lower", full_kernel(p, rows)};
  }
  fail(Errc::BadIndex, "unknown bipartite fixture variant");
}

Fixture fixture_second_cycle(int variant) {
  if (variant == 0) {
    // bowtie glued at the diamond's bottom: {a, f} < {c, h}
    Poset p = Poset::from_cover_edges(
        {"a", "b", "c", "d", "f", "h"},
        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"a", "h"},
         {"f", "c"}, {"f", "h"}});
    return {"bowtie-at-bottom",
            diamond_system(p, spread(p, half(), {"a", "f"}),
                           spread(p, half(), {"f", "h"}),
                           spread(p, half(), {"f", "c"}),
                           spread(p, half(), {"c", "h"}))};
  }
  if (variant == 1) {
    // bowtie glued at a middle corner: {b, f} < {g, h}
    Poset p = Poset::from_cover_edges(
        {"a", "b", "c", "d", "f", "g", "h"},
        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"b", "g"},
         {"b", "h"}, {"f", "g"}, {"f", "h"}});
    return {"bowtie-at-middle",
            diamond_system(p, spread(p, half(), {"b", "f"}),
                           spread(p, half(), {"b", "g"}),
                           spread(p, half(), {"f", "g"}),
                           spread(p, half(), {"g", "h"}))};
  }
  if (variant == 2) {
    // a second diamond stacked on the top corner
    Poset p = Poset::from_cover_edges(
        {"a", "b", "c", "d", "p", "q", "r"},
        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "p"},
         {"d", "q"}, {"p", "r"}, {"q", "r"}});
    return {"stacked-diamond",
            diamond_system(p, spread(p, half(), {"d", "p"}),
                           spread(p, half(), {"p", "q"}),
                           spread(p, half(), {"d", "r"}),
                           spread(p, half(), {"p", "r"}))};
  }
  fail(Errc::BadIndex, "unknown second-cycle fixture variant");
}

Fixture fixture_yposet() {
  // a three-pronged branch a < f < {g, h} sharing only a with the diamond
  Poset p = Poset::from_cover_edges(
      {"a", "b", "c", "d", "f", "g", "h"},
      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"a", "f"},
       {"f", "g"}, {"f", "h"}});
  return {"y-branch",
          diamond_system(p, spread(p, half(), {"a", "f"}),
                         spread(p, half(), {"a", "g"}),
                         spread(p, half(), {"a", "h"}),
                         spread(p, half(), {"g", "h"}))};
}

std::vector<Fixture> all_fixtures() {
  return {fixture_bipartite_violation(0), fixture_bipartite_violation(1),
          fixture_second_cycle(0), fixture_second_cycle(1), fixture_second_cycle(2),
          fixture_yposet()};
}

MeasureSystem extend_to_full(const MeasureSystem& diamond_sys) {
  const Poset& host = diamond_sys.support;
  const Poset& idx = diamond_sys.index;
  if (idx.size() != 4) fail(Errc::BadIndex, "a diamond index poset is required");
  int a = -1, d = -1, b = -1, c = -1;
  for (int i = 0; i < 4; ++i) {
    if (popcount(idx.down_of(i)) == 1)
      a = i;
    else if (popcount(idx.up_of(i)) == 1)
      d = i;
    else if (b < 0)
      b = i;
    else
      c = i;
  }
  if (a < 0 || b < 0 || c < 0 || d < 0)
    fail(Errc::BadIndex, "a diamond index poset is required");
  int bh = host.index_of(idx.name(b)), ch = host.index_of(idx.name(c));
  std::vector<RationalMeasure> family;
  for (int x = 0; x < host.size(); ++x) {
    int own = idx.find(host.name(x));
    if (own >= 0) {
      family.push_back(diamond_sys.family[own]);
    } else if ((host.leq(bh, x) && bh != x) || (host.leq(ch, x) && ch != x)) {
      family.push_back(diamond_sys.family[d]);
    } else if (!host.leq(x, bh) && !host.leq(x, ch)) {
      family.push_back(diamond_sys.family[a]);
    } else {
      fail(Errc::RuleGap, "element below a middle corner only; extension rule is silent");
    }
  }
  MeasureSystem out = make_system(host, host, std::move(family));
  if (!system_is_stoch_monotone(out))
    fail(Errc::NotStochasticallyMonotone, "extension rule broke monotonicity");
  return out;
}

}  // namespace monoteq
