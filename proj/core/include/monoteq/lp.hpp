#pragma once

#include <optional>
#include <vector>

#include "monoteq/rational.hpp"

namespace monoteq {

/// Exact rational linear program. Variables are nonnegative unless
/// declared free; rows are equalities or inequalities; the optional
/// objective is maximized.
class LinearProgram {
 public:
  enum class Rel { Eq, Le, Ge };

  int add_var(bool nonneg = true);
  int num_vars() const { return static_cast<int>(nonneg_.size()); }

  /// Sparse row: pairs (variable, coefficient).
  void add_row(const std::vector<std::pair<int, Rat>>& terms, Rel rel, const Rat& rhs);
  void set_objective(int var, const Rat& coef);

  struct Row {
    std::vector<std::pair<int, Rat>> terms;
    Rel rel;
    Rat rhs;
  };
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<bool>& nonneg() const { return nonneg_; }
  const std::vector<Rat>& objective() const { return objective_; }

 private:
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
  std::vector<Rat> objective_;
};

struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  std::vector<Rat> x;  // one value per declared variable, when feasible
  Rat objective = 0;   // attained maximum, when feasible and bounded
};

/// Exact feasible point, or nullopt when the program is infeasible.
/// Deterministic: two-phase simplex with Bland's rule (termination
/// guaranteed without tolerances).
std::optional<std::vector<Rat>> lp_feasible(const LinearProgram& lp);

/// Maximizes the objective; result flags distinguish infeasible and
/// unbounded outcomes.
LpResult lp_maximize(const LinearProgram& lp);

}  // namespace monoteq
