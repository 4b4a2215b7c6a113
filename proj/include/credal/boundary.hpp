#pragma once

#include <cstddef>
#include <vector>

#include "credal/beliefs.hpp"
#include "credal/distance.hpp"
#include "credal/revision.hpp"

namespace credal {

struct BoundaryOptions {
  /// Permutation enumeration is |W|! and guarded here; raising the guard
  /// past 8 worlds is the caller's explicit choice.
  std::size_t max_worlds = 8;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Deduplicated boundary belief states of a belief base, sorted canonically.
struct BoundarySet {
  BeliefBase source;
  std::vector<BeliefState> states;
};

/// The unique satisfying state that lexicographically maximizes cumulative
/// probability along perm: the first world gets as much mass as the base
/// allows, then the second, and so on.
BeliefState max_asap(const BeliefBase& base, const std::vector<World>& perm);

/// MaxASAP over every permutation of the world set, deduplicated.
/// Throws VocabularyTooLargeError past the configured guard.
BoundarySet boundary_states(const BeliefBase& base, const BoundaryOptions& opts = {});

enum class StateRevision { GI, MCI };

/// Elementwise revision of the boundary set, deduplicated. MCI drops states
/// on which it is undefined; if that drops everything the result would be
/// empty and RevisionUndefinedError is thrown.
std::vector<BeliefState> revise_boundary(const BoundarySet& set, const Formula& alpha,
                                         StateRevision method, const PseudoDistance& d);

/// Upper/lower probability envelopes of the states, one world at a time:
/// (minterm(w)) <= max b(w) unless that is 1, (minterm(w)) >= min b(w)
/// unless that is 0. Throws EmptyStateSetError.
BeliefBase induce_bb(const std::vector<BeliefState>& states, const Vocabulary& vocab);

enum class BaseRevision { BoundaryGI, BoundaryMCI, MaxEntGI };

/// Full belief-base revision pipeline.
BeliefBase revise_bb(const BeliefBase& base, const Formula& alpha, BaseRevision method,
                     const PseudoDistance& d, const BoundaryOptions& opts = {});

}  // namespace credal
