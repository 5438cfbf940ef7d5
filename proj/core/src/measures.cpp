#include "monoteq/measures.hpp"

#include "monoteq/error.hpp"

namespace monoteq {

Rat RationalMeasure::total() const {
  Rat t = 0;
  for (const Rat& m : mass) t += m;
  return t;
}

Rat RationalMeasure::mass_of(Mask subset) const {
  Rat t = 0;
  for (int i = 0; i < support.size(); ++i)
    if ((subset >> i) & 1) t += mass[i];
  return t;
}

RationalMeasure unit_mass(const Poset& s, int x) {
  if (x < 0 || x >= s.size()) fail(Errc::BadIndex, "unit mass outside support");
  RationalMeasure m{s, std::vector<Rat>(s.size(), 0)};
  m.mass[x] = 1;
  return m;
}

RationalMeasure unit_mass(const Poset& s, const std::string& x) {
  return unit_mass(s, s.index_of(x));
}

RationalMeasure scaled_indicator(const Poset& s, Mask subset, const Rat& coef) {
  if (coef < 0) fail(Errc::ParseError, "negative mass");
  RationalMeasure m{s, std::vector<Rat>(s.size(), 0)};
  for (int i = 0; i < s.size(); ++i)
    if ((subset >> i) & 1) m.mass[i] = coef;
  return m;
}

MeasureSystem make_system(Poset index, Poset support, std::vector<RationalMeasure> family) {
  if (static_cast<int>(family.size()) != index.size())
    fail(Errc::BadIndex, "one measure per index element required");
  for (const auto& m : family) {
    if (!m.support.same_order_as(support))
      fail(Errc::SupportMismatch, "system members must share the support poset");
    if (static_cast<int>(m.mass.size()) != support.size())
      fail(Errc::SupportMismatch, "measure has wrong dimension");
    for (const Rat& v : m.mass)
      if (v < 0) fail(Errc::MassMismatch, "negative mass");
  }
  return {std::move(index), std::move(support), std::move(family)};
}

Mask stoch_leq_witness(const RationalMeasure& p, const RationalMeasure& q) {
  if (!p.support.same_order_as(q.support))
    fail(Errc::SupportMismatch, "stochastic comparison needs a common support");
  if (p.total() != q.total())
    fail(Errc::MassMismatch, "stochastic comparison needs equal totals");
  for (Mask u : p.support.up_sets())
    if (p.mass_of(u) > q.mass_of(u)) return u;
  return 0;
}

bool stoch_leq(const RationalMeasure& p, const RationalMeasure& q) {
  return stoch_leq_witness(p, q) == 0;
}

bool system_is_stoch_monotone(const MeasureSystem& s) {
  for (int a = 0; a < s.index.size(); ++a)
    for (int b = 0; b < s.index.size(); ++b)
      if (a != b && s.index.leq(a, b) && !stoch_leq(s.family[a], s.family[b]))
        return false;
  return true;
}

MeasureSystem weak_combination(const MeasureSystem& s, const Rat& theta) {
  if (theta <= 0 || theta > 1)
    fail(Errc::ThetaOutOfRange, "theta must lie in (0, 1]");
  std::vector<RationalMeasure> family;
  for (int a = 0; a < s.index.size(); ++a) {
    int x = s.support.index_of(s.index.name(a));  // UnknownElement if not embedded
    RationalMeasure m = s.family[a];
    for (Rat& v : m.mass) v *= theta;
    m.mass[x] += 1 - theta;
    family.push_back(std::move(m));
  }
  // The index must be induced in the support for the mixture to make sense.
  if (!s.support.induced(s.index.elements()).same_order_as(s.index))
    fail(Errc::SupportMismatch, "index poset is not induced in the support");
  return {s.index, s.support, std::move(family)};
}

DistributionFunction distribution_function(const RationalMeasure& p, const RootedTree& t) {
  if (!p.support.same_order_as(t.poset()))
    fail(Errc::SupportMismatch, "measure support must equal the tree vertex set");
  DistributionFunction d{t, {}, {}};
  int n = t.poset().size();
  d.f.resize(n);
  d.f_minus.resize(n);
  for (int x = 0; x < n; ++x) {
    d.f[x] = p.mass_of(t.section_closed(x));
    d.f_minus[x] = p.mass_of(t.section_open(x));
  }
  return d;
}

bool df_stoch_leq(const DistributionFunction& f, const DistributionFunction& g) {
  if (!f.tree.poset().same_order_as(g.tree.poset()) || f.tree.root() != g.tree.root())
    fail(Errc::SupportMismatch, "distribution functions live on different trees");
  if (f.total() != g.total())
    fail(Errc::MassMismatch, "comparability requires a common total mass");
  for (int x = 0; x < f.tree.poset().size(); ++x) {
    bool down = f.tree.closed_section_is_down_set(x);
    bool up = f.tree.closed_section_is_up_set(x);
    if (!down && !up)
      fail(Errc::NotOrdered, "a closed section is neither a down-set nor an up-set");
    if (down && f.f[x] < g.f[x]) return false;
    if (up && f.f[x] > g.f[x]) return false;
  }
  return true;
}

}  // namespace monoteq
