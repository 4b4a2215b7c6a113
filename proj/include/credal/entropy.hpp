#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "credal/beliefs.hpp"

namespace credal {

/// Shannon entropy in nats, with 0 ln 0 = 0.
double shannon_entropy(const BeliefState& b);

/// Directed divergence R(c,b) in nats. Returns nullopt (undefined) when
/// some world has b(w) = 0 but c(w) > 0; terms with c(w) = 0 contribute 0.
std::optional<double> cross_entropy(const BeliefState& c, const BeliefState& b);

struct MaxEntropyOptions {
  double step = 0.5;                       // exponentiated-gradient step
  double tolerance = 1e-9;                 // successive-iterate max-norm
  std::size_t max_iterations = 100000;
  std::size_t max_snap_denominator = 1000;
  double snap_tolerance = 1e-6;            // per-coordinate snap acceptance
};

struct MaxEntropyResult {
  BeliefState state;
  bool exact = false;          // true when the snapped rational state
                               // satisfies the base exactly
  std::vector<double> raw;     // float optimum before rationalization
  std::size_t iterations = 0;
};

/// The most entropic belief state satisfying base (unique; the entropy is
/// strictly concave over a convex polytope). Exponentiated-gradient ascent
/// on the simplex; the linear constraints are enforced each step by cyclic
/// KL projections with Dykstra corrections. Deterministic start at the
/// interior point maximizing the minimum world probability.
///
/// The float optimum is snapped to a nearby small-denominator rational
/// state and re-verified against base exactly; when no snap is feasible the
/// raw float result is carried with exact = false.
///
/// Throws InconsistentBeliefBaseError / NonConvergenceError.
MaxEntropyResult max_entropy_detailed(const BeliefBase& base, const MaxEntropyOptions& opts = {});

BeliefState max_entropy(const BeliefBase& base);

}  // namespace credal
