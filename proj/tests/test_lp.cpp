#include "doctest.h"
#include "helpers.hpp"
#include "monoteq/lp.hpp"

using namespace monoteq;

TEST_CASE("feasibility and optimum of a small program") {
  // max x + 2y s.t. x + y <= 4, y <= 3, x,y >= 0 -> (1, 3), objective 7.
  LinearProgram lp;
  int x = lp.add_var(), y = lp.add_var();
  lp.add_row({{x, 1}, {y, 1}}, LinearProgram::Rel::Le, 4);
  lp.add_row({{y, 1}}, LinearProgram::Rel::Le, 3);
  lp.set_objective(x, 1);
  lp.set_objective(y, 2);
  LpResult r = lp_maximize(lp);
  REQUIRE(r.feasible);
  CHECK(!r.unbounded);
  CHECK(r.objective == 7);
  CHECK(r.x[x] == 1);
  CHECK(r.x[y] == 3);
}

TEST_CASE("infeasible and unbounded programs are distinguished") {
  LinearProgram bad;
  int x = bad.add_var();
  bad.add_row({{x, 1}}, LinearProgram::Rel::Ge, 2);
  bad.add_row({{x, 1}}, LinearProgram::Rel::Le, 1);
  CHECK(!lp_feasible(bad).has_value());
  CHECK(!lp_maximize(bad).feasible);

  LinearProgram open;
  int z = open.add_var();
  open.add_row({{z, 1}}, LinearProgram::Rel::Ge, 0);
  open.set_objective(z, 1);
  LpResult r = lp_maximize(open);
  CHECK(r.feasible);
  CHECK(r.unbounded);
}

TEST_CASE("free variables take negative values") {
  LinearProgram lp;
  int x = lp.add_var(false);
  lp.add_row({{x, 1}}, LinearProgram::Rel::Eq, Rat(-3, 2));
  auto sol = lp_feasible(lp);
  REQUIRE(sol.has_value());
  CHECK((*sol)[x] == Rat(-3, 2));
}

TEST_CASE("degenerate program terminates (anti-cycling)") {
  // The classic Beale-style degenerate setup; Bland's rule must exit.
  LinearProgram lp;
  int v[4];
  for (int& i : v) i = lp.add_var();
  lp.add_row({{v[0], Rat(1, 4)}, {v[1], -8}, {v[2], -1}, {v[3], 9}},
             LinearProgram::Rel::Le, 0);
  lp.add_row({{v[0], Rat(1, 2)}, {v[1], -12}, {v[2], Rat(-1, 2)}, {v[3], 3}},
             LinearProgram::Rel::Le, 0);
  lp.add_row({{v[2], 1}}, LinearProgram::Rel::Le, 1);
  lp.set_objective(v[0], Rat(3, 4));
  lp.set_objective(v[1], -150);
  lp.set_objective(v[2], Rat(1, 50));
  lp.set_objective(v[3], -6);
  LpResult r = lp_maximize(lp);
  REQUIRE(r.feasible);
  CHECK(!r.unbounded);
  // Hand-checked optimum: x = (1, 0, 1, 0).
  CHECK(r.objective == Rat(77, 100));
  CHECK(r.x[v[0]] == 1);
  CHECK(r.x[v[2]] == 1);
}

TEST_CASE("transportation feasibility matches the northwest-corner construction") {
  monoteq::RandomSource rng(77);
  // Random balanced supplies/demands; the LP must agree with the greedy
  // northwest-corner feasible point, which always exists.
  for (int t = 0; t < 20; ++t) {
    int m = rng.uniform(2, 4), n = rng.uniform(2, 4);
    int total = rng.uniform(4, 20);
    std::vector<int> supply(m, 0), demand(n, 0);
    for (int i = 0; i < total; ++i) ++supply[rng.uniform(0, m - 1)];
    for (int j = 0; j < total; ++j) ++demand[rng.uniform(0, n - 1)];

    // Greedy oracle.
    std::vector<std::vector<int>> plan(m, std::vector<int>(n, 0));
    {
      std::vector<int> s = supply, d = demand;
      int i = 0, j = 0;
      while (i < m && j < n) {
        int take = std::min(s[i], d[j]);
        plan[i][j] = take;
        s[i] -= take;
        d[j] -= take;
        if (s[i] == 0) ++i;
        if (j < n && d[j] == 0) ++j;
      }
      for (int x : s) REQUIRE(x == 0);
    }

    LinearProgram lp;
    for (int i = 0; i < m * n; ++i) lp.add_var();
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rat>> row;
      for (int j = 0; j < n; ++j) row.emplace_back(i * n + j, 1);
      lp.add_row(row, LinearProgram::Rel::Eq, supply[i]);
    }
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Rat>> row;
      for (int i = 0; i < m; ++i) row.emplace_back(i * n + j, 1);
      lp.add_row(row, LinearProgram::Rel::Eq, demand[j]);
    }
    auto sol = lp_feasible(lp);
    REQUIRE(sol.has_value());
    // Both are transportation plans with the same marginals.
    for (int i = 0; i < m; ++i) {
      Rat lp_row = 0, greedy_row = 0;
      for (int j = 0; j < n; ++j) {
        lp_row += (*sol)[i * n + j];
        greedy_row += plan[i][j];
      }
      CHECK(lp_row == greedy_row);
    }
  }
}
