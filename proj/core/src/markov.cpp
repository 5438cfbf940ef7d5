#include "monoteq/markov.hpp"

#include <random>

#include "monoteq/classify.hpp"
#include "monoteq/error.hpp"
#include "monoteq/lp.hpp"

namespace monoteq {

Generator::Generator(Poset states, std::vector<std::vector<Rat>> rates)
    : states_(std::move(states)), rates_(std::move(rates)) {
  int n = states_.size();
  if (static_cast<int>(rates_.size()) != n)
    fail(Errc::BadIndex, "rate matrix dimension mismatch");
  lambda_star_ = 0;
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rates_[x].size()) != n)
      fail(Errc::BadIndex, "rate matrix dimension mismatch");
    Rat exit = 0;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if (rates_[x][y] < 0) fail(Errc::MassMismatch, "negative off-diagonal rate");
      exit += rates_[x][y];
    }
    rates_[x][x] = -exit;
    if (exit > lambda_star_) lambda_star_ = exit;
  }
  if (lambda_star_ == 0)
    fail(Errc::MassMismatch, "generator must have a positive exit rate somewhere");
}

Rat Generator::rate_into(int x, Mask a) const {
  Rat t = 0;
  for (int y = 0; y < states_.size(); ++y)
    if ((a >> y) & 1) t += rates_[x][y];
  return t;
}

RationalMeasure TransitionKernel::row(int x) const {
  return {states, q[x]};
}

MeasureSystem TransitionKernel::as_system() const {
  std::vector<RationalMeasure> family;
  for (int x = 0; x < states.size(); ++x) family.push_back(row(x));
  return make_system(states, states, std::move(family));
}

TransitionKernel uniformize(const Generator& l, const Rat& lambda) {
  if (lambda < l.lambda_star())
    fail(Errc::LambdaTooSmall, "uniformization rate below the maximal exit rate");
  int n = l.states().size();
  TransitionKernel k{l.states(), std::vector<std::vector<Rat>>(n, std::vector<Rat>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      k.q[x][y] = (x == y ? Rat(1) : Rat(0)) + l.rate(x, y) / lambda;
  return k;
}

bool kernel_is_stoch_monotone(const TransitionKernel& q) {
  return system_is_stoch_monotone(q.as_system());
}

bool massey_check(const Generator& l) {
  const Poset& s = l.states();
  auto ups = s.up_sets();
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      if (x == y || !s.leq(x, y)) continue;
      for (Mask u : ups) {
        if (!((u >> y) & 1) && l.rate_into(x, u) > l.rate_into(y, u)) return false;
        if (((u >> x) & 1) && l.rate_into(x, s.all() & ~u) < l.rate_into(y, s.all() & ~u))
          return false;
      }
    }
  return true;
}

bool sm_continuous(const Generator& l) {
  return kernel_is_stoch_monotone(uniformize(l, 2 * l.lambda_star()));
}

std::optional<GeneratorDecomposition> decompose_generator(const Generator& l,
                                                          unsigned long bound) {
  const Poset& s = l.states();
  int n = s.size();
  std::vector<MonotoneMap> maps;
  for (auto& h : monotone_maps(s, s, bound)) {
    bool identity = true;
    for (int x = 0; x < n && identity; ++x) identity = h.assignment[x] == x;
    if (!identity) maps.push_back(h);
  }
  LinearProgram lp;
  for (size_t i = 0; i < maps.size(); ++i) lp.add_var(true);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<std::pair<int, Rat>> terms;
      for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].assignment[x] == y) terms.emplace_back(static_cast<int>(i), 1);
      lp.add_row(terms, LinearProgram::Rel::Eq, l.rate(x, y));
    }
  auto sol = lp_feasible(lp);
  if (!sol) return std::nullopt;
  GeneratorDecomposition d;
  d.maps = std::move(maps);
  d.gamma = std::move(*sol);
  return d;
}

Rat GeneratorDecomposition::total_rate() const {
  Rat t = 0;
  for (const Rat& g : gamma) t += g;
  return t;
}

std::vector<PathEvent> simulate_path(const Generator& l, const std::string& x0,
                                     double horizon, std::uint64_t seed) {
  const Poset& s = l.states();
  int x = s.index_of(x0);
  TransitionKernel k = uniformize(l, l.lambda_star());
  double rate = l.lambda_star().get_d();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp_dist(rate);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<PathEvent> events{{0.0, s.name(x)}};
  double t = 0.0;
  for (;;) {
    t += exp_dist(rng);
    if (t > horizon) break;
    double u = unif(rng), acc = 0.0;
    int next = s.size() - 1;
    for (int y = 0; y < s.size(); ++y) {
      acc += k.q[x][y].get_d();
      if (u < acc) {
        next = y;
        break;
      }
    }
    if (next != x) {
      x = next;
      events.push_back({t, s.name(x)});
    }
  }
  return events;
}

bool ct_equivalence(const Poset& p) {
  return verdict(p).kind != Verdict::Kind::Fails;
}

}  // namespace monoteq
