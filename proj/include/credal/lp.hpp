#pragma once

#include <cstddef>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class Rel { Le, Eq, Ge };

enum class Direction { Maximize, Minimize };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rel rel = Rel::Le;
  Rational bound;
};

/// Exact linear program over world-probability variables. The simplex
/// constraints (every variable >= 0, variables sum to 1) are always part of
/// the polytope; add_constraint adds rows on top of them.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t var_count);

  std::size_t var_count() const noexcept { return var_count_; }

  void add_constraint(std::vector<Rational> coeffs, Rel rel, Rational bound);
  void set_objective(std::vector<Rational> objective);

  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
  const std::vector<Rational>& objective() const noexcept { return objective_; }

  /// The constraint rows in raw form, sum-to-one row included.
  std::vector<LinearConstraint> standard_rows() const;

 private:
  std::size_t var_count_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Rational> objective_;
};

/// Dense rational simplex over {x >= 0} plus arbitrary linear rows.
/// Pivoting uses Bland's rule throughout, so degenerate polytopes (the
/// normal case for boundary computations) terminate.
///
/// Construction runs phase 1. A feasible tableau can then maximize a
/// sequence of objectives; after each stage freeze_optimal_face() pins the
/// reached optimum, which is what lexicographic maximization needs: a
/// column whose reduced cost is negative at a stage optimum leaves the
/// optimal face for good, so it is excluded from later pivots.
class SimplexTableau {
 public:
  SimplexTableau(std::size_t var_count, const std::vector<LinearConstraint>& rows);

  bool feasible() const noexcept { return feasible_; }

  /// Maximizes the objective (given over the structural variables) from the
  /// current basis. Requires a feasible tableau.
  Rational maximize(const std::vector<Rational>& objective);

  /// Freezes every nonbasic column whose reduced cost was negative at the
  /// end of the last maximize() call.
  void freeze_optimal_face();

  /// Values of the structural variables at the current basis.
  std::vector<Rational> solution() const;

 private:
  void pivot(std::size_t row, std::size_t col);
  void run(std::vector<Rational> cost);  // cost over all columns

  std::size_t nstruct_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<char> frozen_;
  std::vector<Rational> reduced_;
  bool feasible_ = false;
};

/// True iff the constraint polytope is nonempty (decided exactly).
bool is_feasible(const LinearProgram& lp);

struct Optimum {
  Rational value;
  std::vector<Rational> witness;
};

/// Exact optimum of lp's objective over its polytope, with an attaining
/// vertex. Throws InfeasibleError on an empty polytope; unboundedness
/// cannot occur (the polytope lives in the probability simplex).
Optimum optimize(const LinearProgram& lp, Direction direction);

/// Sequentially maximizes each objective, pinning every reached optimum
/// before moving to the next, and returns the final witness.
std::vector<Rational> lex_maximize(const LinearProgram& lp,
                                   const std::vector<std::vector<Rational>>& objectives);

}  // namespace credal
