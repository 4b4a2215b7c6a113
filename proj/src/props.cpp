#include "credal/props.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace credal {

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  char first = name.front();
  if (!std::isalpha(static_cast<unsigned char>(first)) && first != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms, std::size_t max_atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("vocabulary must be nonempty");
  if (atoms_.size() > max_atoms) {
    throw VocabularyTooLargeError("vocabulary has " + std::to_string(atoms_.size()) +
                                  " atoms, cap is " + std::to_string(max_atoms));
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!valid_atom_name(atoms_[i])) {
      throw std::invalid_argument("invalid atom name '" + atoms_[i] + "'");
    }
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (atoms_[i] == atoms_[j]) {
        throw std::invalid_argument("duplicate atom '" + atoms_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<World> Vocabulary::worlds() const {
  std::vector<World> out(world_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

bool world_truth(World w, std::size_t atom_index, const Vocabulary& vocab) {
  std::size_t n = vocab.size();
  if (w.index >= vocab.world_count()) throw std::out_of_range("world index out of range");
  if (atom_index >= n) throw std::out_of_range("atom index out of range");
  std::uint32_t truth_vector = static_cast<std::uint32_t>(vocab.world_count() - 1) - w.index;
  return (truth_vector >> (n - 1 - atom_index)) & 1u;
}

std::string world_label(World w, const Vocabulary& vocab) {
  std::string label(vocab.size(), '0');
  for (std::size_t k = 0; k < vocab.size(); ++k) {
    if (world_truth(w, k, vocab)) label[k] = '1';
  }
  return label;
}

World world_from_label(std::string_view label, const Vocabulary& vocab) {
  if (label.size() != vocab.size()) {
    throw std::invalid_argument("world label '" + std::string(label) +
                                "' does not match vocabulary size");
  }
  std::uint32_t truth_vector = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("world label must consist of 0s and 1s");
    }
    truth_vector = (truth_vector << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return World{static_cast<std::uint32_t>(vocab.world_count() - 1) - truth_vector};
}

struct Formula::Node {
  Kind kind;
  std::string atom;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Formula Formula::truth() {
  return Formula(std::make_shared<const Node>(Node{Kind::True, {}, nullptr, nullptr}));
}

Formula Formula::falsity() {
  return Formula(std::make_shared<const Node>(Node{Kind::False, {}, nullptr, nullptr}));
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("atom_name on non-atom");
  return node_->atom;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("child on non-negation");
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or) {
    throw std::logic_error("left on leaf node");
  }
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or) {
    throw std::logic_error("right on leaf node");
  }
  return Formula(node_->rhs);
}

namespace {

bool nodes_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a.atom_name() == b.atom_name();
    case Formula::Kind::Not:
      return nodes_equal(a.child(), b.child());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return nodes_equal(a.left(), b.left()) && nodes_equal(a.right(), b.right());
  }
  return false;
}

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Atom: out += f.atom_name(); return;
    case Formula::Kind::Not: {
      Formula c = f.child();
      out += '!';
      if (precedence(c.kind()) < precedence(Formula::Kind::Not)) {
        out += '(';
        render(c, out);
        out += ')';
      } else {
        render(c, out);
      }
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      int prec = precedence(f.kind());
      Formula l = f.left();
      Formula r = f.right();
      // Left-associative: a right child of equal precedence keeps its parens.
      if (precedence(l.kind()) < prec) {
        out += '(';
        render(l, out);
        out += ')';
      } else {
        render(l, out);
      }
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      if (precedence(r.kind()) <= prec) {
        out += '(';
        render(r, out);
        out += ')';
      } else {
        render(r, out);
      }
      return;
    }
  }
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  return nodes_equal(*this, other);
}

std::string Formula::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << f.to_string();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : text_(text), vocab_(vocab) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (consume('|')) f = Formula::disjunction(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (consume('&')) f = Formula::conjunction(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (consume('!')) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = parse_or();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return f;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "true") return Formula::truth();
      if (name == "false") return Formula::falsity();
      if (!vocab_.index_of(name)) throw UnknownAtomError(std::string(name));
      return Formula::atom(std::string(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab).parse();
}

bool satisfies(World w, const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: {
      auto idx = vocab.index_of(f.atom_name());
      if (!idx) throw UnknownAtomError(f.atom_name());
      return world_truth(w, *idx, vocab);
    }
    case Formula::Kind::Not: return !satisfies(w, f.child(), vocab);
    case Formula::Kind::And: return satisfies(w, f.left(), vocab) && satisfies(w, f.right(), vocab);
    case Formula::Kind::Or: return satisfies(w, f.left(), vocab) || satisfies(w, f.right(), vocab);
  }
  return false;
}

std::vector<World> models(const Formula& f, const Vocabulary& vocab) {
  std::vector<World> out;
  for (std::uint32_t i = 0; i < vocab.world_count(); ++i) {
    World w{i};
    if (satisfies(w, f, vocab)) out.push_back(w);
  }
  return out;
}

Formula minterm(World w, const Vocabulary& vocab) {
  Formula f = world_truth(w, 0, vocab) ? Formula::atom(vocab.atom(0))
                                       : Formula::negation(Formula::atom(vocab.atom(0)));
  for (std::size_t k = 1; k < vocab.size(); ++k) {
    Formula lit = world_truth(w, k, vocab)
                      ? Formula::atom(vocab.atom(k))
                      : Formula::negation(Formula::atom(vocab.atom(k)));
    f = Formula::conjunction(std::move(f), std::move(lit));
  }
  return f;
}

}  // namespace credal
