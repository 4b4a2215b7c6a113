#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credal {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// A formula required to have models has none.
class UnsatisfiableFormulaError : public Error {
 public:
  using Error::Error;
};

/// The constraint polytope of a belief base is empty.
class InconsistentBeliefBaseError : public Error {
 public:
  using Error::Error;
};

/// A linear program without feasible points was handed to an optimizer.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An operation that enumerates worlds (or permutations of them) was asked
/// to run past its configured guard.
class VocabularyTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Bayesian conditioning on evidence with zero prior probability.
class ZeroProbabilityEvidenceError : public Error {
 public:
  using Error::Error;
};

/// A set-level revision produced no states (e.g. MCI dropped every member).
class RevisionUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Envelope induction asked for on an empty state set.
class EmptyStateSetError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied world distance violates the pseudo-distance axioms, or
/// could not be validated.
class DistanceAxiomError : public Error {
 public:
  using Error::Error;
};

/// Iterative optimization did not reach its tolerance within the cap.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace credal
