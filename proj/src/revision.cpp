#include "credal/revision.hpp"

#include <limits>
#include <utility>

namespace credal {

GiMap::GiMap(const Formula& alpha, const PseudoDistance& d, const Vocabulary& vocab)
    : world_count_(vocab.world_count()), targets_(vocab.world_count()) {
  auto alpha_worlds = models(alpha, vocab);
  if (alpha_worlds.empty()) {
    throw UnsatisfiableFormulaError("generalized imaging on an unsatisfiable observation");
  }
  for (World w : vocab.worlds()) {
    int best = std::numeric_limits<int>::max();
    auto& targets = targets_[w.index];
    for (World m : alpha_worlds) {
      int dist = d(m, w);
      if (dist < best) {
        best = dist;
        targets.clear();
      }
      if (dist == best) targets.push_back(m.index);
    }
  }
}

BeliefState GiMap::apply(const BeliefState& b) const {
  if (b.world_count() != world_count_) {
    throw std::invalid_argument("belief state does not match imaging map");
  }
  std::vector<Rational> result(world_count_, Rational(0));
  for (std::size_t source = 0; source < world_count_; ++source) {
    const Rational& mass = b.at(source);
    if (mass.is_zero()) continue;
    const auto& targets = targets_[source];
    Rational share = mass / Rational(static_cast<long>(targets.size()));
    for (std::uint32_t t : targets) result[t] += share;
  }
  return BeliefState(std::move(result));
}

BeliefState gi_revise(const BeliefState& b, const Formula& alpha, const PseudoDistance& d,
                      const Vocabulary& vocab) {
  return GiMap(alpha, d, vocab).apply(b);
}

BeliefState bc_revise(const BeliefState& b, const Formula& alpha, const Vocabulary& vocab) {
  auto alpha_worlds = models(alpha, vocab);
  if (alpha_worlds.empty()) {
    throw UnsatisfiableFormulaError("conditioning on an unsatisfiable observation");
  }
  Rational mass(0);
  for (World w : alpha_worlds) mass += b.at(w);
  if (mass.is_zero()) {
    throw ZeroProbabilityEvidenceError("conditioning on zero-probability evidence");
  }
  std::vector<Rational> result(b.world_count(), Rational(0));
  for (World w : alpha_worlds) result[w.index] = b.at(w) / mass;
  return BeliefState(std::move(result));
}

std::optional<BeliefState> mci_revise(const BeliefState& b, const Formula& alpha,
                                      const Vocabulary& vocab) {
  auto alpha_worlds = models(alpha, vocab);
  if (alpha_worlds.empty()) {
    throw UnsatisfiableFormulaError("MCE inference on an unsatisfiable observation");
  }
  Rational mass(0);
  for (World w : alpha_worlds) mass += b.at(w);
  if (mass.is_zero()) return std::nullopt;
  std::vector<Rational> result(b.world_count(), Rational(0));
  for (World w : alpha_worlds) result[w.index] = b.at(w) / mass;
  return BeliefState(std::move(result));
}

}  // namespace credal
