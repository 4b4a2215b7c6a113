#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "credal/props.hpp"

namespace credal {

/// Number of atoms on which the two worlds disagree.
int hamming(World a, World b);

/// Integer world metric. Built-in Hamming plus matrix-backed custom
/// distances; custom distances are validated against the pseudo-distance
/// axioms (non-negativity, identity, symmetry, triangle inequality,
/// faithfulness) before use.
class PseudoDistance {
 public:
  static PseudoDistance hamming_distance();
  static PseudoDistance from_matrix(std::vector<std::vector<int>> matrix, std::string name);

  int operator()(World a, World b) const { return fn_(a, b); }
  const std::string& name() const noexcept { return name_; }

 private:
  PseudoDistance(std::string name, std::function<int(World, World)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name_;
  std::function<int(World, World)> fn_;
};

/// Exhaustive check of the five pseudo-distance axioms; returns a
/// description of the first violated axiom, or nullopt when all hold.
/// Intended for vocabularies of at most 4 atoms.
std::optional<std::string> check_axioms(const PseudoDistance& d, const Vocabulary& vocab);

/// Reads a world_count x world_count integer matrix. Validates the axioms
/// exhaustively for vocabularies of at most 4 atoms; larger matrices are
/// rejected unless validation is explicitly waived.
/// Throws DistanceAxiomError.
PseudoDistance load_distance_matrix(std::istream& in, const Vocabulary& vocab,
                                    bool waive_validation = false);
PseudoDistance load_distance_matrix_file(const std::string& path, const Vocabulary& vocab,
                                         bool waive_validation = false);

/// The alpha-worlds closest to w. Throws UnsatisfiableFormulaError when
/// alpha has no models; otherwise the result is nonempty.
std::vector<World> min_set(const Formula& alpha, World w, const PseudoDistance& d,
                           const Vocabulary& vocab);

/// Per-world Min-set cardinality, indexed by canonical world order.
std::vector<std::size_t> min_set_sizes(const Formula& alpha, const PseudoDistance& d,
                                       const Vocabulary& vocab);

}  // namespace credal
