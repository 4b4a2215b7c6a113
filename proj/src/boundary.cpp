#include "credal/boundary.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "credal/entropy.hpp"

namespace credal {

namespace {

std::vector<std::vector<Rational>> unit_objectives(const std::vector<World>& perm,
                                                   std::size_t world_count) {
  std::vector<std::vector<Rational>> objectives;
  objectives.reserve(perm.size());
  for (World w : perm) {
    std::vector<Rational> unit(world_count, Rational(0));
    unit.at(w.index) = Rational(1);
    objectives.push_back(std::move(unit));
  }
  return objectives;
}

BeliefState lex_solve(SimplexTableau tableau, const std::vector<std::uint32_t>& perm,
                      std::size_t world_count) {
  std::vector<Rational> unit(world_count, Rational(0));
  for (std::uint32_t w : perm) {
    unit[w] = Rational(1);
    tableau.maximize(unit);
    tableau.freeze_optimal_face();
    unit[w] = Rational(0);
  }
  return BeliefState(tableau.solution());
}

void check_permutation(const std::vector<World>& perm, std::size_t world_count) {
  if (perm.size() != world_count) {
    throw std::invalid_argument("permutation must cover the full world set");
  }
  std::vector<char> seen(world_count, 0);
  for (World w : perm) {
    if (w.index >= world_count || seen[w.index]) {
      throw std::invalid_argument("permutation must cover the full world set");
    }
    seen[w.index] = 1;
  }
}

}  // namespace

BeliefState max_asap(const BeliefBase& base, const std::vector<World>& perm) {
  const std::size_t m = base.vocabulary().world_count();
  check_permutation(perm, m);
  LinearProgram lp = base.to_lp();
  SimplexTableau tableau(lp.var_count(), lp.standard_rows());
  if (!tableau.feasible()) {
    throw InconsistentBeliefBaseError("MaxASAP of an unsatisfiable belief base");
  }
  std::vector<std::uint32_t> indices;
  indices.reserve(perm.size());
  for (World w : perm) indices.push_back(w.index);
  return lex_solve(std::move(tableau), indices, m);
}

BoundarySet boundary_states(const BeliefBase& base, const BoundaryOptions& opts) {
  const std::size_t m = base.vocabulary().world_count();
  if (m > opts.max_worlds) {
    throw VocabularyTooLargeError(
        "boundary enumeration over " + std::to_string(m) + " worlds needs " +
        std::to_string(m) + "! permutations; raise max_worlds to allow it");
  }
  LinearProgram lp = base.to_lp();
  SimplexTableau tableau(lp.var_count(), lp.standard_rows());
  if (!tableau.feasible()) {
    throw InconsistentBeliefBaseError("boundary states of an unsatisfiable belief base");
  }

  std::vector<std::vector<std::uint32_t>> perms;
  {
    std::vector<std::uint32_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (perms.size() < 256) threads = 1;

  std::set<BeliefState> dedup;
  if (threads == 1) {
    for (const auto& perm : perms) dedup.insert(lex_solve(tableau, perm, m));
  } else {
    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    std::size_t chunk = (perms.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(perms.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        std::set<BeliefState> local;
        for (std::size_t i = begin; i < end; ++i) {
          local.insert(lex_solve(tableau, perms[i], m));
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        dedup.merge(local);
      });
    }
    for (auto& th : pool) th.join();
  }

  return BoundarySet{base, std::vector<BeliefState>(dedup.begin(), dedup.end())};
}

std::vector<BeliefState> revise_boundary(const BoundarySet& set, const Formula& alpha,
                                         StateRevision method, const PseudoDistance& d) {
  const Vocabulary& vocab = set.source.vocabulary();
  std::set<BeliefState> dedup;
  if (method == StateRevision::GI) {
    GiMap map(alpha, d, vocab);
    for (const auto& b : set.states) dedup.insert(map.apply(b));
  } else {
    if (models(alpha, vocab).empty()) {
      throw UnsatisfiableFormulaError("MCE inference on an unsatisfiable observation");
    }
    for (const auto& b : set.states) {
      if (auto revised = mci_revise(b, alpha, vocab)) dedup.insert(std::move(*revised));
    }
    if (dedup.empty()) {
      throw RevisionUndefinedError(
          "MCI is undefined on every boundary state (all have zero probability on the "
          "observation)");
    }
  }
  return std::vector<BeliefState>(dedup.begin(), dedup.end());
}

BeliefBase induce_bb(const std::vector<BeliefState>& states, const Vocabulary& vocab) {
  if (states.empty()) throw EmptyStateSetError("cannot induce a belief base from no states");
  std::vector<ProbFormula> constraints;
  for (World w : vocab.worlds()) {
    Rational upper = states.front().at(w);
    Rational lower = upper;
    for (const auto& b : states) {
      upper = std::max(upper, b.at(w));
      lower = std::min(lower, b.at(w));
    }
    if (upper != Rational(1)) constraints.emplace_back(minterm(w, vocab), Rel::Le, upper);
    if (lower != Rational(0)) constraints.emplace_back(minterm(w, vocab), Rel::Ge, lower);
  }
  return BeliefBase::checked(vocab, std::move(constraints));
}

BeliefBase revise_bb(const BeliefBase& base, const Formula& alpha, BaseRevision method,
                     const PseudoDistance& d, const BoundaryOptions& opts) {
  switch (method) {
    case BaseRevision::BoundaryGI: {
      BoundarySet set = boundary_states(base, opts);
      return induce_bb(revise_boundary(set, alpha, StateRevision::GI, d), base.vocabulary());
    }
    case BaseRevision::BoundaryMCI: {
      BoundarySet set = boundary_states(base, opts);
      return induce_bb(revise_boundary(set, alpha, StateRevision::MCI, d), base.vocabulary());
    }
    case BaseRevision::MaxEntGI: {
      BeliefState representative = max_entropy(base);
      BeliefState revised = gi_revise(representative, alpha, d, base.vocabulary());
      return induce_bb({revised}, base.vocabulary());
    }
  }
  throw std::logic_error("unknown revision method");
}

}  // namespace credal
