#include "credal/beliefs.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace credal {

BeliefState::BeliefState(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw std::invalid_argument("belief state over zero worlds");
  Rational sum(0);
  for (const auto& p : probabilities_) {
    if (p.sign() < 0 || p > Rational(1)) {
      throw std::invalid_argument("belief state entry outside [0,1]");
    }
    sum += p;
  }
  if (sum != Rational(1)) {
    throw std::invalid_argument("belief state entries must sum to 1, got " + sum.to_string());
  }
}

std::ostream& operator<<(std::ostream& os, const BeliefState& b) {
  for (std::size_t i = 0; i < b.world_count(); ++i) {
    if (i) os << ',';
    os << b.at(i);
  }
  return os;
}

ProbFormula::ProbFormula(Formula body, Rel rel, Rational bound)
    : body_(std::move(body)), rel_(rel), bound_(std::move(bound)) {
  if (bound_.sign() < 0 || bound_ > Rational(1)) {
    throw std::invalid_argument("probability bound outside [0,1]");
  }
}

std::string rel_to_string(Rel rel) {
  switch (rel) {
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ge: return ">=";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const ProbFormula& pf) {
  return os << "P(" << pf.body() << ") " << rel_to_string(pf.rel()) << " " << pf.bound();
}

BeliefBase BeliefBase::checked(Vocabulary vocab, std::vector<ProbFormula> constraints) {
  BeliefBase base(std::move(vocab), std::move(constraints));
  if (!is_feasible(base.to_lp())) {
    throw InconsistentBeliefBaseError("belief base is unsatisfiable");
  }
  return base;
}

BeliefBase BeliefBase::unchecked(Vocabulary vocab, std::vector<ProbFormula> constraints) {
  return BeliefBase(std::move(vocab), std::move(constraints));
}

LinearProgram BeliefBase::to_lp() const {
  LinearProgram lp(vocab_.world_count());
  for (const auto& pf : constraints_) {
    std::vector<Rational> coeffs(vocab_.world_count(), Rational(0));
    for (World w : models(pf.body(), vocab_)) coeffs[w.index] = Rational(1);
    lp.add_constraint(std::move(coeffs), pf.rel(), pf.bound());
  }
  return lp;
}

Rational prob_of(const BeliefState& b, const Formula& f, const Vocabulary& vocab) {
  if (b.world_count() != vocab.world_count()) {
    throw std::invalid_argument("belief state does not match vocabulary");
  }
  Rational sum(0);
  for (World w : models(f, vocab)) sum += b.at(w);
  return sum;
}

bool bstate_satisfies(const BeliefState& b, const ProbFormula& pf, const Vocabulary& vocab) {
  Rational p = prob_of(b, pf.body(), vocab);
  switch (pf.rel()) {
    case Rel::Le: return p <= pf.bound();
    case Rel::Eq: return p == pf.bound();
    case Rel::Ge: return p >= pf.bound();
  }
  return false;
}

bool bstate_satisfies(const BeliefState& b, const BeliefBase& base) {
  for (const auto& pf : base.constraints()) {
    if (!bstate_satisfies(b, pf, base.vocabulary())) return false;
  }
  return true;
}

namespace {

LinearProgram lp_with_objective(const BeliefBase& base, const Formula& body) {
  LinearProgram lp = base.to_lp();
  std::vector<Rational> objective(lp.var_count(), Rational(0));
  for (World w : models(body, base.vocabulary())) objective[w.index] = Rational(1);
  lp.set_objective(std::move(objective));
  return lp;
}

}  // namespace

bool entails(const BeliefBase& base, const ProbFormula& phi) {
  LinearProgram lp = lp_with_objective(base, phi.body());
  switch (phi.rel()) {
    case Rel::Le:
      return optimize(lp, Direction::Maximize).value <= phi.bound();
    case Rel::Ge:
      return optimize(lp, Direction::Minimize).value >= phi.bound();
    case Rel::Eq:
      return optimize(lp, Direction::Maximize).value <= phi.bound() &&
             optimize(lp, Direction::Minimize).value >= phi.bound();
  }
  return false;
}

bool entails(const BeliefBase& base, const BeliefBase& other) {
  for (const auto& pf : other.constraints()) {
    if (!entails(base, pf)) return false;
  }
  return true;
}

bool equivalent(const BeliefBase& a, const BeliefBase& b) {
  if (a.vocabulary() != b.vocabulary()) {
    throw std::invalid_argument("equivalence requires a shared vocabulary");
  }
  return entails(a, b) && entails(b, a);
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

ProbFormula parse_prob_formula(std::string_view text, const Vocabulary& vocab) {
  std::string line = strip(text);
  if (line.size() < 4 || line[0] != 'P' || line[1] != '(') {
    throw ParseError("expected 'P(<formula>) <rel> <value>'", 0);
  }
  // Find the parenthesis matching "P(".
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i] == '(') ++depth;
    if (line[i] == ')') {
      --depth;
      if (depth == 0) {
        close = i;
        break;
      }
    }
  }
  if (close == std::string::npos) throw ParseError("unbalanced parentheses", line.size());
  Formula body = parse_formula(std::string_view(line).substr(2, close - 2), vocab);

  std::string rest = strip(std::string_view(line).substr(close + 1));
  Rel rel;
  std::size_t value_at;
  if (rest.rfind("<=", 0) == 0) {
    rel = Rel::Le;
    value_at = 2;
  } else if (rest.rfind(">=", 0) == 0) {
    rel = Rel::Ge;
    value_at = 2;
  } else if (rest.rfind("=", 0) == 0) {
    rel = Rel::Eq;
    value_at = 1;
  } else {
    throw ParseError("expected '<=', '=' or '>=' after formula", close + 1);
  }
  std::string value = strip(std::string_view(rest).substr(value_at));
  if (value.empty()) throw ParseError("missing probability value", line.size());
  Rational bound;
  try {
    bound = Rational::parse(value);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line.size() - value.size());
  }
  return ProbFormula(std::move(body), rel, std::move(bound));
}

BeliefBase read_belief_base(std::istream& in, std::size_t max_atoms) {
  std::string line;
  std::vector<ProbFormula> constraints;
  std::optional<Vocabulary> vocab;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string content = strip(line);
    if (content.empty()) continue;
    if (!vocab) {
      if (content.rfind("atoms:", 0) != 0) {
        throw ParseError("first line must declare 'atoms: ...' (line " +
                             std::to_string(lineno) + ")",
                         0);
      }
      std::vector<std::string> atoms;
      std::istringstream names(content.substr(6));
      std::string name;
      while (names >> name) atoms.push_back(name);
      vocab.emplace(std::move(atoms), max_atoms);
      continue;
    }
    try {
      constraints.push_back(parse_prob_formula(content, *vocab));
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")", 0);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")", 0);
    }
  }
  if (!vocab) throw ParseError("belief base file has no 'atoms:' line", 0);
  return BeliefBase::checked(std::move(*vocab), std::move(constraints));
}

BeliefBase read_belief_base_file(const std::string& path, std::size_t max_atoms) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_belief_base(in, max_atoms);
}

void write_belief_base(std::ostream& out, const BeliefBase& base) {
  out << "atoms:";
  for (const auto& a : base.vocabulary().atoms()) out << ' ' << a;
  out << '\n';
  for (const auto& pf : base.constraints()) out << pf << '\n';
}

BeliefState parse_belief_state(std::string_view line, const Vocabulary& vocab) {
  std::vector<Rational> probs;
  std::size_t start = 0;
  std::string text(line);
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string field = comma == std::string::npos ? text.substr(start)
                                                   : text.substr(start, comma - start);
    probs.push_back(Rational::parse(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (probs.size() != vocab.world_count()) {
    throw std::invalid_argument("belief state has " + std::to_string(probs.size()) +
                                " entries, expected " + std::to_string(vocab.world_count()));
  }
  return BeliefState(std::move(probs));
}

BeliefState read_belief_state_file(const std::string& path, const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!strip(line).empty()) return parse_belief_state(strip(line), vocab);
  }
  throw Error("belief state file '" + path + "' is empty");
}

void write_belief_state(std::ostream& out, const BeliefState& b) {
  out << b << '\n';
}

}  // namespace credal
