#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "credal/lp.hpp"
#include "credal/props.hpp"
#include "credal/rational.hpp"

namespace credal {

/// Exact probability distribution over all worlds of a vocabulary, indexed
/// by canonical world order. Entries lie in [0,1] and sum to exactly 1.
class BeliefState {
 public:
  explicit BeliefState(std::vector<Rational> probabilities);

  std::size_t world_count() const noexcept { return probabilities_.size(); }
  const Rational& at(World w) const { return probabilities_.at(w.index); }
  const Rational& at(std::size_t i) const { return probabilities_.at(i); }
  const std::vector<Rational>& probabilities() const noexcept { return probabilities_; }

  bool operator==(const BeliefState& other) const { return probabilities_ == other.probabilities_; }
  bool operator<(const BeliefState& other) const { return probabilities_ < other.probabilities_; }

 private:
  std::vector<Rational> probabilities_;
};

std::ostream& operator<<(std::ostream& os, const BeliefState& b);

/// A probability constraint (alpha) rel x with x in [0,1].
class ProbFormula {
 public:
  ProbFormula(Formula body, Rel rel, Rational bound);

  const Formula& body() const noexcept { return body_; }
  Rel rel() const noexcept { return rel_; }
  const Rational& bound() const noexcept { return bound_; }

  bool operator==(const ProbFormula& other) const {
    return rel_ == other.rel_ && bound_ == other.bound_ && body_ == other.body_;
  }

 private:
  Formula body_;
  Rel rel_;
  Rational bound_;
};

std::string rel_to_string(Rel rel);
std::ostream& operator<<(std::ostream& os, const ProbFormula& pf);

/// A finite set of probability constraints over a shared vocabulary. The
/// checked constructor guarantees consistency (a nonempty constraint
/// polytope); the unchecked one exists for intermediate machinery.
class BeliefBase {
 public:
  static BeliefBase checked(Vocabulary vocab, std::vector<ProbFormula> constraints);
  static BeliefBase unchecked(Vocabulary vocab, std::vector<ProbFormula> constraints);

  const Vocabulary& vocabulary() const noexcept { return vocab_; }
  const std::vector<ProbFormula>& constraints() const noexcept { return constraints_; }

  /// The LP whose polytope is the set of satisfying belief states.
  LinearProgram to_lp() const;

 private:
  BeliefBase(Vocabulary vocab, std::vector<ProbFormula> constraints)
      : vocab_(std::move(vocab)), constraints_(std::move(constraints)) {}
  Vocabulary vocab_;
  std::vector<ProbFormula> constraints_;
};

/// Sum of b over the models of f.
Rational prob_of(const BeliefState& b, const Formula& f, const Vocabulary& vocab);

bool bstate_satisfies(const BeliefState& b, const ProbFormula& pf, const Vocabulary& vocab);
bool bstate_satisfies(const BeliefState& b, const BeliefBase& base);

/// True iff every satisfying state of base also satisfies phi; decided by
/// exact LP optimization of b(alpha) over the base's polytope.
bool entails(const BeliefBase& base, const ProbFormula& phi);

/// Conjunction of per-constraint entailments.
bool entails(const BeliefBase& base, const BeliefBase& other);

/// Mutual entailment. Requires identical vocabularies.
bool equivalent(const BeliefBase& a, const BeliefBase& b);

// ---------------------------------------------------------------------------
// File formats
//
// Belief base (one item per line, '#' starts a comment):
//   atoms: q r
//   P(q) >= 0.6
//   P(!q & !r) = 1/10
// Rationals are written back as exact fractions.
//
// Belief state: one line of comma-separated fractions in canonical world
// order, e.g. "3/5,0,2/5,0".
// ---------------------------------------------------------------------------

/// Parses "P(<formula>) <rel> <value>".
ProbFormula parse_prob_formula(std::string_view text, const Vocabulary& vocab);

BeliefBase read_belief_base(std::istream& in,
                            std::size_t max_atoms = Vocabulary::kDefaultMaxAtoms);
BeliefBase read_belief_base_file(const std::string& path,
                                 std::size_t max_atoms = Vocabulary::kDefaultMaxAtoms);
void write_belief_base(std::ostream& out, const BeliefBase& base);

BeliefState parse_belief_state(std::string_view line, const Vocabulary& vocab);
BeliefState read_belief_state_file(const std::string& path, const Vocabulary& vocab);
void write_belief_state(std::ostream& out, const BeliefState& b);

}  // namespace credal
