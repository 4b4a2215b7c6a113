#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "credal/beliefs.hpp"
#include "credal/boundary.hpp"
#include "credal/distance.hpp"

namespace credal {

/// All belief states with probabilities on the 1/resolution lattice that
/// satisfy a belief base: a finite brute-force surrogate for its polytope.
struct Grid {
  std::size_t resolution = 0;
  std::vector<BeliefState> states;
};

/// Exhaustive composition enumeration filtered by exact satisfaction.
/// Guarded at 3 atoms. Throws VocabularyTooLargeError.
Grid grid_states(const BeliefBase& base, std::size_t resolution);

/// Two-directional desk-scale check that the belief base induced from the
/// revised boundary states captures exactly the revised polytope:
///  - subset: every grid state, GI-revised, satisfies the induced base
///    exactly;
///  - envelope attainment: the revised boundary states attain each induced
///    bound exactly, and the revised grid approaches each bound within
///    1/resolution.
struct Theorem1Report {
  bool subset_ok = false;
  bool attainment_ok = false;
  bool grid_gap_ok = false;
  bool grid_empty = false;
  Rational worst_subset_violation;  // largest constraint violation over revised grid states
  Rational worst_gap;               // largest envelope gap of the revised grid
  std::size_t grid_size = 0;
  std::size_t boundary_size = 0;
  std::size_t revised_boundary_size = 0;
  bool passed() const { return subset_ok && attainment_ok && grid_gap_ok; }
};

Theorem1Report check_theorem1(const BeliefBase& base, const Formula& alpha,
                              const PseudoDistance& d, std::size_t resolution,
                              const BoundaryOptions& opts = {});

std::string to_text(const Theorem1Report& report);

/// The six KM-style revision postulates, evaluated with LP-backed
/// entailment/equivalence. Implications with a failed hypothesis hold
/// vacuously; the hypothesis flags record which case occurred.
struct PostulateReport {
  std::array<bool, 6> holds{};                  // postulates 1..6
  bool expansion_satisfiable = false;           // B u {(a)=1} satisfiable (postulate 2)
  bool alpha_equivalent_beta = false;           // hypothesis of postulate 4
  bool conjunction_satisfiable = false;         // a ^ b satisfiable (postulates 5, 6)
  bool union_after_satisfiable = false;         // B*a u {(b)=1} satisfiable (postulate 6)
  bool all_hold() const {
    for (bool h : holds) {
      if (!h) return false;
    }
    return true;
  }
};

PostulateReport check_postulates(const BeliefBase& base, const Formula& alpha,
                                 const Formula& beta, BaseRevision method,
                                 const PseudoDistance& d, const BoundaryOptions& opts = {});

std::string to_text(const PostulateReport& report);

}  // namespace credal
