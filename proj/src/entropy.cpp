#include "credal/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace credal {

double shannon_entropy(const BeliefState& b) {
  double h = 0.0;
  for (const auto& p : b.probabilities()) {
    if (p.is_zero()) continue;
    double v = p.to_double();
    h -= v * std::log(v);
  }
  return h;
}

std::optional<double> cross_entropy(const BeliefState& c, const BeliefState& b) {
  if (c.world_count() != b.world_count()) {
    throw std::invalid_argument("cross-entropy over mismatched world counts");
  }
  double r = 0.0;
  for (std::size_t w = 0; w < c.world_count(); ++w) {
    if (c.at(w).is_zero()) continue;
    if (b.at(w).is_zero()) return std::nullopt;
    double cv = c.at(w).to_double();
    r += cv * std::log(cv / b.at(w).to_double());
  }
  return r;
}

namespace {

struct Group {
  std::vector<std::size_t> members;  // indices into the support vector
  Rel rel;
  double bound;
};

double group_mass(const std::vector<double>& x, const Group& g) {
  double m = 0.0;
  for (std::size_t i : g.members) m += x[i];
  return m;
}

double violation(const std::vector<double>& x, const Group& g) {
  double m = group_mass(x, g);
  switch (g.rel) {
    case Rel::Le: return std::max(0.0, m - g.bound);
    case Rel::Ge: return std::max(0.0, g.bound - m);
    case Rel::Eq: return std::abs(m - g.bound);
  }
  return 0.0;
}

void normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  for (double& v : x) v /= s;
}

/// KL projection onto {x in simplex : mass(group) rel bound}; the closed
/// form is a conditional rescale of the group and its complement.
void project_single(std::vector<double>& x, const Group& g) {
  double m = group_mass(x, g);
  bool needs_projection = false;
  switch (g.rel) {
    case Rel::Le: needs_projection = m > g.bound; break;
    case Rel::Ge: needs_projection = m < g.bound; break;
    case Rel::Eq: needs_projection = m != g.bound; break;
  }
  if (!needs_projection) return;
  double c = g.bound;
  if (m <= 0.0 && c > 0.0) {
    throw NonConvergenceError("constraint group lost all mass during projection");
  }
  std::vector<char> in_group(x.size(), 0);
  for (std::size_t i : g.members) in_group[i] = 1;
  double rest = 1.0 - m;
  double group_scale = m > 0.0 ? c / m : 0.0;
  double rest_scale = rest > 0.0 ? (1.0 - c) / rest : 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] *= in_group[i] ? group_scale : rest_scale;
  }
}

/// Cyclic KL projections with Dykstra corrections onto the intersection of
/// the constraint sets.
std::vector<double> project_intersection(std::vector<double> y, const std::vector<Group>& groups) {
  if (groups.empty()) return y;
  const std::size_t k = y.size();
  std::vector<std::vector<double>> corrections(groups.size(), std::vector<double>(k, 1.0));
  constexpr double kInnerTol = 1e-13;
  constexpr std::size_t kMaxCycles = 1000;
  for (std::size_t cycle = 0; cycle < kMaxCycles; ++cycle) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      std::vector<double> z(k);
      for (std::size_t j = 0; j < k; ++j) z[j] = y[j] * corrections[i][j];
      normalize(z);
      std::vector<double> p = z;
      project_single(p, groups[i]);
      for (std::size_t j = 0; j < k; ++j) {
        corrections[i][j] = p[j] > 0.0 ? z[j] / p[j] : 1.0;
      }
      y = std::move(p);
    }
    double worst = 0.0;
    for (const auto& g : groups) worst = std::max(worst, violation(y, g));
    if (worst <= kInnerTol) break;
  }
  return y;
}

}  // namespace

MaxEntropyResult max_entropy_detailed(const BeliefBase& base, const MaxEntropyOptions& opts) {
  const Vocabulary& vocab = base.vocabulary();
  const std::size_t m = vocab.world_count();
  LinearProgram lp = base.to_lp();
  if (!is_feasible(lp)) {
    throw InconsistentBeliefBaseError("max entropy of an unsatisfiable belief base");
  }

  // Worlds that can carry positive probability at all.
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w < m; ++w) {
    std::vector<Rational> unit(m, Rational(0));
    unit[w] = Rational(1);
    lp.set_objective(std::move(unit));
    if (optimize(lp, Direction::Maximize).value.sign() > 0) support.push_back(w);
  }
  const std::size_t k = support.size();

  std::vector<Group> groups;
  for (const auto& pf : base.constraints()) {
    std::vector<char> is_model(m, 0);
    for (World w : models(pf.body(), vocab)) is_model[w.index] = 1;
    Group g;
    g.rel = pf.rel();
    g.bound = pf.bound().to_double();
    for (std::size_t i = 0; i < k; ++i) {
      if (is_model[support[i]]) g.members.push_back(i);
    }
    groups.push_back(std::move(g));
  }

  std::vector<double> x(k, 0.0);
  std::size_t iterations = 0;
  if (k == 1) {
    x[0] = 1.0;
  } else {
    // Interior start: the feasible point maximizing the minimum world
    // probability (always positive on the support).
    std::vector<LinearConstraint> rows;
    std::vector<Rational> sum_row(k + 1, Rational(1));
    sum_row[k] = Rational(0);
    rows.push_back(LinearConstraint{std::move(sum_row), Rel::Eq, Rational(1)});
    for (const auto& pf : base.constraints()) {
      std::vector<char> is_model(m, 0);
      for (World w : models(pf.body(), vocab)) is_model[w.index] = 1;
      std::vector<Rational> coeffs(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        if (is_model[support[i]]) coeffs[i] = Rational(1);
      }
      rows.push_back(LinearConstraint{std::move(coeffs), pf.rel(), pf.bound()});
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Rational> coeffs(k + 1, Rational(0));
      coeffs[i] = Rational(1);
      coeffs[k] = Rational(-1);
      rows.push_back(LinearConstraint{std::move(coeffs), Rel::Ge, Rational(0)});
    }
    SimplexTableau maximin(k + 1, rows);
    std::vector<Rational> objective(k + 1, Rational(0));
    objective[k] = Rational(1);
    maximin.maximize(objective);
    std::vector<Rational> start = maximin.solution();
    for (std::size_t i = 0; i < k; ++i) x[i] = start[i].to_double();
    normalize(x);

    const double shrink = 1.0 - opts.step;
    bool converged = false;
    for (; iterations < opts.max_iterations; ++iterations) {
      std::vector<double> prev = x;
      for (double& v : x) v = std::pow(v, shrink);
      normalize(x);
      x = project_intersection(std::move(x), groups);
      double diff = 0.0;
      for (std::size_t i = 0; i < k; ++i) diff = std::max(diff, std::abs(x[i] - prev[i]));
      if (diff < opts.tolerance) {
        converged = true;
        ++iterations;
        break;
      }
    }
    if (!converged) {
      throw NonConvergenceError("max entropy did not converge within " +
                                std::to_string(opts.max_iterations) + " iterations");
    }
  }

  std::vector<double> raw(m, 0.0);
  for (std::size_t i = 0; i < k; ++i) raw[support[i]] = x[i];

  // Rationalization: snap to the smallest denominator that reproduces the
  // floats within snap_tolerance and satisfies the base exactly.
  for (std::size_t den = 1; den <= opts.max_snap_denominator; ++den) {
    std::vector<long> counts(m, 0);
    long total = 0;
    for (std::size_t w = 0; w < m; ++w) {
      counts[w] = std::lround(raw[w] * static_cast<double>(den));
      counts[w] = std::clamp(counts[w], 0L, static_cast<long>(den));
      total += counts[w];
    }
    while (total != static_cast<long>(den)) {
      std::size_t pick = m;
      double best = -1.0;
      for (std::size_t w = 0; w < m; ++w) {
        double gain = total < static_cast<long>(den)
                          ? raw[w] * static_cast<double>(den) - static_cast<double>(counts[w])
                          : static_cast<double>(counts[w]) - raw[w] * static_cast<double>(den);
        if (total > static_cast<long>(den) && counts[w] == 0) continue;
        if (gain > best) {
          best = gain;
          pick = w;
        }
      }
      if (pick == m) break;
      counts[pick] += total < static_cast<long>(den) ? 1 : -1;
      total += total < static_cast<long>(den) ? 1 : -1;
    }
    if (total != static_cast<long>(den)) continue;
    double worst = 0.0;
    for (std::size_t w = 0; w < m; ++w) {
      worst = std::max(worst, std::abs(static_cast<double>(counts[w]) / static_cast<double>(den) -
                                       raw[w]));
    }
    if (worst > opts.snap_tolerance) continue;
    std::vector<Rational> probs(m);
    for (std::size_t w = 0; w < m; ++w) {
      probs[w] = Rational(counts[w], static_cast<long>(den));
    }
    BeliefState candidate(std::move(probs));
    if (bstate_satisfies(candidate, base)) {
      return MaxEntropyResult{std::move(candidate), true, std::move(raw), iterations};
    }
  }

  // No feasible snap: carry the floats, normalized exactly.
  std::vector<Rational> probs(m, Rational(0));
  Rational sum(0);
  for (std::size_t w = 0; w < m; ++w) {
    probs[w] = raw[w] > 0.0 ? Rational::from_double(raw[w]) : Rational(0);
    sum += probs[w];
  }
  for (auto& p : probs) p /= sum;
  return MaxEntropyResult{BeliefState(std::move(probs)), false, std::move(raw), iterations};
}

BeliefState max_entropy(const BeliefBase& base) {
  return max_entropy_detailed(base).state;
}

}  // namespace credal
