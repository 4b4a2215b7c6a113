#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

/// A truth assignment over the vocabulary, identified by its index in the
/// canonical world order: index 0 is the all-true world, index 2^n - 1 the
/// all-false world. The label of a world is its truth vector ("110"), most
/// significant bit = first atom.
struct World {
  std::uint32_t index = 0;
  auto operator<=>(const World&) const = default;
};

/// Ordered list of distinct atom names. The order is fixed at construction
/// and defines the world numbering; n atoms yield exactly 2^n worlds.
class Vocabulary {
 public:
  static constexpr std::size_t kDefaultMaxAtoms = 10;

  explicit Vocabulary(std::vector<std::string> atoms,
                      std::size_t max_atoms = kDefaultMaxAtoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  std::size_t world_count() const noexcept { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// All worlds in canonical order.
  std::vector<World> worlds() const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> atoms_;
};

bool world_truth(World w, std::size_t atom_index, const Vocabulary& vocab);
std::string world_label(World w, const Vocabulary& vocab);
World world_from_label(std::string_view label, const Vocabulary& vocab);

/// Immutable propositional formula AST. NOT and AND are the core
/// connectives; OR, TRUE and FALSE are kept as first-class nodes so that
/// parsing and rendering round-trip structurally.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  const std::string& atom_name() const;  // Kind::Atom only
  Formula child() const;                 // Kind::Not only
  Formula left() const;                  // And / Or
  Formula right() const;                 // And / Or

  /// Canonical ASCII rendering with minimal parentheses;
  /// parse_formula(to_string()) reproduces the AST exactly.
  std::string to_string() const;

  bool operator==(const Formula& other) const;  // structural equality

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Grammar: atoms [A-Za-z_][A-Za-z0-9_]*, '!' NOT, '&' AND, '|' OR,
/// parentheses, keywords 'true'/'false'; precedence ! > & > |.
/// Throws ParseError (with position) or UnknownAtomError.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

/// Truth-functional evaluation of f at w.
bool satisfies(World w, const Formula& f, const Vocabulary& vocab);

/// The worlds satisfying f, in canonical order.
std::vector<World> models(const Formula& f, const Vocabulary& vocab);

/// The conjunction of literals uniquely characterizing w (e.g. "q & !r").
Formula minterm(World w, const Vocabulary& vocab);

}  // namespace credal
