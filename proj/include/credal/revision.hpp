#pragma once

#include <optional>
#include <vector>

#include "credal/beliefs.hpp"
#include "credal/distance.hpp"

namespace credal {

/// Precomputed mass-transport structure of generalized imaging for a fixed
/// observation and distance: each source world pushes its probability to
/// its closest observation-worlds, split equally among ties. Build once,
/// apply to many states.
class GiMap {
 public:
  GiMap(const Formula& alpha, const PseudoDistance& d, const Vocabulary& vocab);

  BeliefState apply(const BeliefState& b) const;

  const std::vector<std::uint32_t>& targets_of(std::size_t source) const {
    return targets_.at(source);
  }

 private:
  std::size_t world_count_;
  std::vector<std::vector<std::uint32_t>> targets_;
};

/// Generalized imaging of b on alpha. Mass is conserved exactly; the result
/// is zero outside the models of alpha. Throws UnsatisfiableFormulaError.
BeliefState gi_revise(const BeliefState& b, const Formula& alpha, const PseudoDistance& d,
                      const Vocabulary& vocab);

/// Bayesian conditioning. Throws ZeroProbabilityEvidenceError when
/// b(alpha) = 0 (and UnsatisfiableFormulaError when alpha has no models).
BeliefState bc_revise(const BeliefState& b, const Formula& alpha, const Vocabulary& vocab);

/// Minimum-cross-entropy inference on evidence (alpha)=1. The KL projection
/// onto a conditioning event is conditioning, so this is bc_revise in
/// closed form; when b(alpha) = 0 the divergence is undefined for every
/// candidate and the typed outcome is nullopt rather than an error, so
/// pipelines can drop such states.
std::optional<BeliefState> mci_revise(const BeliefState& b, const Formula& alpha,
                                      const Vocabulary& vocab);

}  // namespace credal
