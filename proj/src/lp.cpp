#include "credal/lp.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace credal {

LinearProgram::LinearProgram(std::size_t var_count) : var_count_(var_count) {
  if (var_count_ == 0) throw std::invalid_argument("linear program needs variables");
  objective_.assign(var_count_, Rational(0));
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Rel rel, Rational bound) {
  if (coeffs.size() != var_count_) {
    throw std::invalid_argument("constraint arity does not match variable count");
  }
  constraints_.push_back(LinearConstraint{std::move(coeffs), rel, std::move(bound)});
}

void LinearProgram::set_objective(std::vector<Rational> objective) {
  if (objective.size() != var_count_) {
    throw std::invalid_argument("objective arity does not match variable count");
  }
  objective_ = std::move(objective);
}

std::vector<LinearConstraint> LinearProgram::standard_rows() const {
  std::vector<LinearConstraint> rows;
  rows.reserve(constraints_.size() + 1);
  rows.push_back(LinearConstraint{std::vector<Rational>(var_count_, Rational(1)), Rel::Eq, Rational(1)});
  rows.insert(rows.end(), constraints_.begin(), constraints_.end());
  return rows;
}

SimplexTableau::SimplexTableau(std::size_t var_count, const std::vector<LinearConstraint>& rows)
    : nstruct_(var_count) {
  std::size_t nrows = rows.size();
  std::size_t nslack = 0;
  for (const auto& row : rows) {
    if (row.rel != Rel::Eq) ++nslack;
  }
  std::size_t art_start = nstruct_ + nslack;
  ncols_ = art_start + nrows;

  a_.assign(nrows, std::vector<Rational>(ncols_, Rational(0)));
  rhs_.assign(nrows, Rational(0));
  basis_.assign(nrows, 0);

  std::size_t slack = nstruct_;
  for (std::size_t r = 0; r < nrows; ++r) {
    const auto& row = rows[r];
    if (row.coeffs.size() != nstruct_) {
      throw std::invalid_argument("constraint arity does not match variable count");
    }
    bool negate = row.bound.sign() < 0;
    for (std::size_t j = 0; j < nstruct_; ++j) {
      a_[r][j] = negate ? -row.coeffs[j] : row.coeffs[j];
    }
    rhs_[r] = negate ? -row.bound : row.bound;
    if (row.rel != Rel::Eq) {
      // Slack for <=, surplus for >=; a sign flip on the row flips the role.
      bool le = (row.rel == Rel::Le) != negate;
      a_[r][slack] = le ? Rational(1) : Rational(-1);
      ++slack;
    }
    a_[r][art_start + r] = Rational(1);
    basis_[r] = art_start + r;
  }

  frozen_.assign(ncols_, 0);

  std::vector<Rational> phase1(ncols_, Rational(0));
  for (std::size_t c = art_start; c < ncols_; ++c) phase1[c] = Rational(-1);
  run(std::move(phase1));
  Rational infeasibility(0);
  for (std::size_t r = 0; r < a_.size(); ++r) {
    if (basis_[r] >= art_start) infeasibility += rhs_[r];
  }
  if (!infeasibility.is_zero()) {
    feasible_ = false;
    return;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot on a
  // structural or slack column are redundant and get dropped.
  for (std::size_t r = a_.size(); r-- > 0;) {
    if (basis_[r] < art_start) continue;
    std::size_t enter = ncols_;
    for (std::size_t c = 0; c < art_start; ++c) {
      if (!a_[r][c].is_zero()) {
        enter = c;
        break;
      }
    }
    if (enter == ncols_) {
      a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
      rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    } else {
      pivot(r, enter);
    }
  }

  for (auto& row : a_) row.resize(art_start);
  ncols_ = art_start;
  frozen_.assign(ncols_, 0);
  feasible_ = true;
}

void SimplexTableau::pivot(std::size_t row, std::size_t col) {
  Rational p = a_[row][col];
  for (auto& v : a_[row]) v /= p;
  rhs_[row] /= p;
  for (std::size_t r = 0; r < a_.size(); ++r) {
    if (r == row) continue;
    Rational f = a_[r][col];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < a_[r].size(); ++c) a_[r][c] -= f * a_[row][c];
    rhs_[r] -= f * rhs_[row];
  }
  basis_[row] = col;
}

void SimplexTableau::run(std::vector<Rational> cost) {
  reduced_ = std::move(cost);
  for (std::size_t r = 0; r < a_.size(); ++r) {
    Rational cb = reduced_[basis_[r]];
    if (cb.is_zero()) continue;
    for (std::size_t c = 0; c < ncols_; ++c) reduced_[c] -= cb * a_[r][c];
  }
  for (;;) {
    std::size_t enter = ncols_;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (!frozen_[c] && reduced_[c].sign() > 0) {
        enter = c;
        break;
      }
    }
    if (enter == ncols_) break;

    std::size_t leave = a_.size();
    Rational best;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (a_[r][enter].sign() <= 0) continue;
      Rational ratio = rhs_[r] / a_[r][enter];
      if (leave == a_.size() || ratio < best ||
          (ratio == best && basis_[r] < basis_[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == a_.size()) {
      throw std::logic_error("unbounded linear program");
    }

    Rational f = reduced_[enter] / a_[leave][enter];
    for (std::size_t c = 0; c < ncols_; ++c) reduced_[c] -= f * a_[leave][c];
    pivot(leave, enter);
  }
}

Rational SimplexTableau::maximize(const std::vector<Rational>& objective) {
  if (!feasible_) throw InfeasibleError("maximize on infeasible tableau");
  if (objective.size() != nstruct_) {
    throw std::invalid_argument("objective arity does not match variable count");
  }
  std::vector<Rational> cost(ncols_, Rational(0));
  for (std::size_t c = 0; c < nstruct_; ++c) cost[c] = objective[c];
  run(std::move(cost));
  Rational value(0);
  for (std::size_t r = 0; r < a_.size(); ++r) {
    if (basis_[r] < nstruct_) value += objective[basis_[r]] * rhs_[r];
  }
  return value;
}

void SimplexTableau::freeze_optimal_face() {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (!frozen_[c] && reduced_[c].sign() < 0) frozen_[c] = 1;
  }
}

std::vector<Rational> SimplexTableau::solution() const {
  std::vector<Rational> x(nstruct_, Rational(0));
  for (std::size_t r = 0; r < a_.size(); ++r) {
    if (basis_[r] < nstruct_) x[basis_[r]] = rhs_[r];
  }
  return x;
}

bool is_feasible(const LinearProgram& lp) {
  return SimplexTableau(lp.var_count(), lp.standard_rows()).feasible();
}

Optimum optimize(const LinearProgram& lp, Direction direction) {
  SimplexTableau tableau(lp.var_count(), lp.standard_rows());
  if (!tableau.feasible()) throw InfeasibleError("optimize on empty polytope");
  std::vector<Rational> objective = lp.objective();
  if (direction == Direction::Minimize) {
    for (auto& v : objective) v = -v;
  }
  Rational value = tableau.maximize(objective);
  if (direction == Direction::Minimize) value = -value;
  return Optimum{std::move(value), tableau.solution()};
}

std::vector<Rational> lex_maximize(const LinearProgram& lp,
                                   const std::vector<std::vector<Rational>>& objectives) {
  SimplexTableau tableau(lp.var_count(), lp.standard_rows());
  if (!tableau.feasible()) throw InfeasibleError("lex_maximize on empty polytope");
  for (const auto& objective : objectives) {
    tableau.maximize(objective);
    tableau.freeze_optimal_face();
  }
  return tableau.solution();
}

}  // namespace credal
