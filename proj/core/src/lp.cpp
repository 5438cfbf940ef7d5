#include "monoteq/lp.hpp"

#include <algorithm>

#include "monoteq/error.hpp"

namespace monoteq {

int LinearProgram::add_var(bool nonneg) {
  nonneg_.push_back(nonneg);
  objective_.push_back(0);
  return static_cast<int>(nonneg_.size()) - 1;
}

void LinearProgram::add_row(const std::vector<std::pair<int, Rat>>& terms, Rel rel,
                            const Rat& rhs) {
  for (auto& [v, c] : terms)
    if (v < 0 || v >= num_vars()) fail(Errc::BadIndex, "row references unknown variable");
  rows_.push_back({terms, rel, rhs});
}

void LinearProgram::set_objective(int var, const Rat& coef) {
  if (var < 0 || var >= num_vars()) fail(Errc::BadIndex, "unknown objective variable");
  objective_[var] = coef;
}

namespace {

// Dense simplex tableau over the standard form  max c·x, Ax = b, x >= 0,
// b >= 0, solved with Bland's rule throughout (anti-cycling, exact).
struct Tableau {
  int m, n;                          // rows, columns (excluding rhs)
  std::vector<std::vector<Rat>> a;   // m x n
  std::vector<Rat> b;                // m
  std::vector<int> basis;            // m, column index basic in each row

  void pivot(int r, int col) {
    Rat p = a[r][col];
    for (int j = 0; j < n; ++j) a[r][j] /= p;
    b[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = col;
  }

  /// Maximizes c over columns flagged enterable. Returns false when
  /// unbounded. Entering: lowest-index column with positive reduced
  /// cost; leaving: lowest basis index among ratio-test minima.
  bool maximize(const std::vector<Rat>& c, const std::vector<bool>& enterable) {
    for (;;) {
      // y = c_B B^-1 is implicit: reduced cost of j is c_j - sum_i c_basis[i] * a[i][j].
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        if (!enterable[j]) continue;
        bool basic = false;
        for (int i = 0; i < m && !basic; ++i) basic = basis[i] == j;
        if (basic) continue;
        Rat red = c[j];
        for (int i = 0; i < m; ++i)
          if (c[basis[i]] != 0 && a[i][j] != 0) red -= c[basis[i]] * a[i][j];
        if (red > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best = 0;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

struct Standardized {
  Tableau t;
  // Column span per declared variable: col_pos, and col_neg >= 0 when the
  // variable is free and split into a difference.
  std::vector<int> col_pos, col_neg;
  int num_structural = 0;  // columns before the artificials
};

Standardized standardize(const LinearProgram& lp) {
  Standardized s;
  int n = 0;
  for (bool nn : lp.nonneg()) {
    s.col_pos.push_back(n++);
    s.col_neg.push_back(nn ? -1 : n++);
  }
  int m = static_cast<int>(lp.rows().size());
  std::vector<std::vector<Rat>> a(m);
  std::vector<Rat> b(m);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows()[i];
    a[i].assign(n, 0);
    for (auto& [v, c] : row.terms) {
      a[i][s.col_pos[v]] += c;
      if (s.col_neg[v] >= 0) a[i][s.col_neg[v]] -= c;
    }
    b[i] = row.rhs;
  }
  // Slack columns turn inequalities into equalities.
  for (int i = 0; i < m; ++i) {
    auto rel = lp.rows()[i].rel;
    if (rel == LinearProgram::Rel::Eq) continue;
    for (int k = 0; k < m; ++k) a[k].push_back(0);
    a[i][n] = rel == LinearProgram::Rel::Le ? 1 : -1;
    ++n;
  }
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  s.num_structural = n;
  // One artificial per row forms the initial basis.
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) a[k].push_back(k == i ? 1 : 0);
  }
  s.t.m = m;
  s.t.n = n + m;
  s.t.a = std::move(a);
  s.t.b = std::move(b);
  s.t.basis.resize(m);
  for (int i = 0; i < m; ++i) s.t.basis[i] = n + i;
  return s;
}

/// Phase 1: drives the artificial columns to zero. Returns false on
/// infeasibility; on success no artificial remains basic (redundant rows
/// are deleted).
bool phase1(Standardized& s) {
  Tableau& t = s.t;
  std::vector<Rat> c(t.n, 0);
  for (int j = s.num_structural; j < t.n; ++j) c[j] = -1;
  std::vector<bool> enterable(t.n, true);
  t.maximize(c, enterable);  // bounded by construction (objective <= 0)
  Rat obj = 0;
  for (int i = 0; i < t.m; ++i)
    if (t.basis[i] >= s.num_structural) obj += t.b[i];
  if (obj != 0) return false;
  for (int i = t.m - 1; i >= 0; --i) {
    if (t.basis[i] < s.num_structural) continue;
    int col = -1;
    for (int j = 0; j < s.num_structural && col < 0; ++j)
      if (t.a[i][j] != 0) col = j;
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      // Redundant constraint: remove the row.
      t.a.erase(t.a.begin() + i);
      t.b.erase(t.b.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.m;
    }
  }
  return true;
}

std::vector<Rat> extract(const LinearProgram& lp, const Standardized& s) {
  std::vector<Rat> col_val(s.t.n, 0);
  for (int i = 0; i < s.t.m; ++i) col_val[s.t.basis[i]] = s.t.b[i];
  std::vector<Rat> x(lp.num_vars());
  for (int v = 0; v < lp.num_vars(); ++v) {
    x[v] = col_val[s.col_pos[v]];
    if (s.col_neg[v] >= 0) x[v] -= col_val[s.col_neg[v]];
  }
  return x;
}

}  // namespace

std::optional<std::vector<Rat>> lp_feasible(const LinearProgram& lp) {
  Standardized s = standardize(lp);
  if (!phase1(s)) return std::nullopt;
  return extract(lp, s);
}

LpResult lp_maximize(const LinearProgram& lp) {
  LpResult res;
  Standardized s = standardize(lp);
  if (!phase1(s)) return res;
  res.feasible = true;
  std::vector<Rat> c(s.t.n, 0);
  for (int v = 0; v < lp.num_vars(); ++v) {
    const Rat& cv = lp.objective()[v];
    if (cv == 0) continue;
    c[s.col_pos[v]] += cv;
    if (s.col_neg[v] >= 0) c[s.col_neg[v]] -= cv;
  }
  std::vector<bool> enterable(s.t.n, true);
  for (int j = s.num_structural; j < s.t.n; ++j) enterable[j] = false;
  if (!s.t.maximize(c, enterable)) {
    res.unbounded = true;
    return res;
  }
  res.x = extract(lp, s);
  for (int v = 0; v < lp.num_vars(); ++v) res.objective += lp.objective()[v] * res.x[v];
  return res;
}

}  // namespace monoteq
