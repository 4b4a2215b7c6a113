#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "credal/boundary.hpp"
#include "credal/oracle.hpp"
#include "support/generators.hpp"

using namespace credal;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

Vocabulary qr() { return Vocabulary({"q", "r"}); }

BeliefState bs(std::initializer_list<const char*> entries) {
  std::vector<Rational> probs;
  for (const char* e : entries) probs.push_back(rat(e));
  return BeliefState(std::move(probs));
}

BeliefBase b1() {
  Vocabulary v = qr();
  return BeliefBase::checked(v, {ProbFormula(parse_formula("q", v), Rel::Ge, rat("0.6"))});
}

BeliefBase b2() {
  Vocabulary v = qr();
  return BeliefBase::checked(v,
                             {ProbFormula(parse_formula("!q & !r", v), Rel::Eq, rat("0.1"))});
}

std::vector<World> perm_of(std::initializer_list<const char*> labels, const Vocabulary& v) {
  std::vector<World> out;
  for (const char* l : labels) out.push_back(world_from_label(l, v));
  return out;
}

ProbFormula pf(const char* formula, Rel rel, const char* bound, const Vocabulary& v) {
  return ProbFormula(parse_formula(formula, v), rel, rat(bound));
}

const PseudoDistance kHamming = PseudoDistance::hamming_distance();

}  // namespace

TEST_CASE("MaxASAP reproduces Example 3") {
  BeliefBase base = b1();
  Vocabulary v = base.vocabulary();
  CHECK(max_asap(base, perm_of({"01", "00", "11", "10"}, v)) ==
        bs({"0.6", "0", "0.4", "0"}));
  CHECK(max_asap(base, perm_of({"11", "10", "01", "00"}, v)) == bs({"1", "0", "0", "0"}));
}

TEST_CASE("MaxASAP on the empty base is greedy") {
  Vocabulary v = qr();
  BeliefBase empty = BeliefBase::checked(v, {});
  CHECK(max_asap(empty, perm_of({"00", "11", "10", "01"}, v)) == bs({"0", "0", "0", "1"}));
}

TEST_CASE("MaxASAP validates its permutation and base") {
  BeliefBase base = b1();
  Vocabulary v = base.vocabulary();
  CHECK_THROWS_AS(max_asap(base, perm_of({"11", "10"}, v)), std::invalid_argument);
  CHECK_THROWS_AS(max_asap(base, perm_of({"11", "11", "01", "00"}, v)), std::invalid_argument);

  BeliefBase bad = BeliefBase::unchecked(
      v, {pf("q", Rel::Ge, "0.6", v), pf("q", Rel::Le, "0.5", v)});
  CHECK_THROWS_AS(max_asap(bad, perm_of({"11", "10", "01", "00"}, v)),
                  InconsistentBeliefBaseError);
}

TEST_CASE("boundary states of B1 are exactly Example 4's six") {
  BoundarySet set = boundary_states(b1());
  std::vector<BeliefState> expected = {
      bs({"1", "0", "0", "0"}),     bs({"0", "1", "0", "0"}),
      bs({"0.6", "0", "0.4", "0"}), bs({"0.6", "0", "0", "0.4"}),
      bs({"0", "0.6", "0.4", "0"}), bs({"0", "0.6", "0", "0.4"})};
  std::sort(expected.begin(), expected.end());
  CHECK(set.states == expected);
}

TEST_CASE("boundary states of B2 are exactly Example 7's three") {
  BoundarySet set = boundary_states(b2());
  std::vector<BeliefState> expected = {bs({"0.9", "0", "0", "0.1"}),
                                       bs({"0", "0.9", "0", "0.1"}),
                                       bs({"0", "0", "0.9", "0.1"})};
  std::sort(expected.begin(), expected.end());
  CHECK(set.states == expected);
}

TEST_CASE("boundary states of the empty base are the unit masses") {
  Vocabulary v = qr();
  BoundarySet set = boundary_states(BeliefBase::checked(v, {}));
  REQUIRE(set.states.size() == 4);
  for (const auto& b : set.states) {
    CHECK(std::count(b.probabilities().begin(), b.probabilities().end(), Rational(1)) == 1);
  }
}

TEST_CASE("permutation enumeration is guarded") {
  Vocabulary big({"a", "b", "c", "d"});
  BeliefBase base = BeliefBase::checked(big, {});
  CHECK_THROWS_AS(boundary_states(base), VocabularyTooLargeError);
}

TEST_CASE("every boundary state satisfies its base") {
  Vocabulary v = qr();
  std::mt19937 rng(7500);
  for (int trial = 0; trial < 25; ++trial) {
    BeliefBase base = testsupport::random_consistent_bb(rng, v);
    BoundarySet set = boundary_states(base);
    CHECK_FALSE(set.states.empty());
    for (const auto& b : set.states) CHECK(bstate_satisfies(b, base));
  }
}

TEST_CASE("greedy MaxASAP dominates every grid state on all cumulative prefixes") {
  Vocabulary v = qr();
  std::mt19937 rng(7501);
  for (int trial = 0; trial < 15; ++trial) {
    BeliefBase base = testsupport::random_consistent_bb(rng, v);
    std::vector<World> perm = v.worlds();
    std::shuffle(perm.begin(), perm.end(), rng);
    BeliefState greedy = max_asap(base, perm);
    Grid grid = grid_states(base, 10);
    for (const auto& g : grid.states) {
      Rational greedy_prefix(0), grid_prefix(0);
      for (World w : perm) {
        greedy_prefix += greedy.at(w);
        grid_prefix += g.at(w);
        CHECK(greedy_prefix >= grid_prefix);
      }
    }
  }
}

TEST_CASE("boundary revision reproduces Example 5") {
  Vocabulary v = qr();
  Formula alpha = parse_formula("(q & !r) | (!q & r)", v);
  auto revised = revise_boundary(boundary_states(b1()), alpha, StateRevision::GI, kHamming);
  std::vector<BeliefState> expected = {
      bs({"0", "1/2", "1/2", "0"}), bs({"0", "1", "0", "0"}),
      bs({"0", "3/10", "7/10", "0"}), bs({"0", "3/5", "2/5", "0"}),
      bs({"0", "4/5", "1/5", "0"})};
  std::sort(expected.begin(), expected.end());
  CHECK(revised == expected);  // six boundary states revise to five
}

TEST_CASE("boundary revision reproduces Example 7") {
  Vocabulary v = qr();
  Formula alpha = parse_formula("!q", v);
  auto revised = revise_boundary(boundary_states(b2()), alpha, StateRevision::GI, kHamming);
  std::vector<BeliefState> expected = {bs({"0", "0", "0.9", "0.1"}),
                                       bs({"0", "0", "0", "1"})};
  std::sort(expected.begin(), expected.end());
  CHECK(revised == expected);
}

TEST_CASE("boundary MCI revision reproduces Example 9") {
  Vocabulary v = qr();
  Formula alpha = parse_formula("(q & !r) | (!q & r)", v);
  auto revised = revise_boundary(boundary_states(b1()), alpha, StateRevision::MCI, kHamming);
  std::vector<BeliefState> expected = {bs({"0", "0", "1", "0"}), bs({"0", "1", "0", "0"}),
                                       bs({"0", "3/5", "2/5", "0"})};
  std::sort(expected.begin(), expected.end());
  CHECK(revised == expected);
}

TEST_CASE("MCI that drops every state signals an undefined revision") {
  Vocabulary v = qr();
  BeliefBase certain = BeliefBase::checked(v, {pf("!q", Rel::Eq, "1", v)});
  BoundarySet set = boundary_states(certain);
  CHECK_THROWS_AS(revise_boundary(set, parse_formula("q", v), StateRevision::MCI, kHamming),
                  RevisionUndefinedError);
  // GI has no such restriction.
  CHECK_FALSE(
      revise_boundary(set, parse_formula("q", v), StateRevision::GI, kHamming).empty());
}

TEST_CASE("envelope induction reproduces Example 6") {
  Vocabulary v = qr();
  Formula alpha = parse_formula("(q & !r) | (!q & r)", v);
  auto revised = revise_boundary(boundary_states(b1()), alpha, StateRevision::GI, kHamming);
  BeliefBase induced = induce_bb(revised, v);
  std::vector<ProbFormula> expected = {
      pf("q & r", Rel::Le, "0", v), pf("q & !r", Rel::Ge, "3/10", v),
      pf("!q & r", Rel::Le, "7/10", v), pf("!q & !r", Rel::Le, "0", v)};
  CHECK(induced.constraints() == expected);
}

TEST_CASE("envelope induction reproduces Example 7") {
  Vocabulary v = qr();
  BeliefBase induced = revise_bb(b2(), parse_formula("!q", v), BaseRevision::BoundaryGI,
                                 kHamming);
  std::vector<ProbFormula> expected = {
      pf("q & r", Rel::Le, "0", v), pf("q & !r", Rel::Le, "0", v),
      pf("!q & r", Rel::Le, "9/10", v), pf("!q & !r", Rel::Ge, "1/10", v)};
  CHECK(induced.constraints() == expected);
}

TEST_CASE("envelope induction edge cases") {
  Vocabulary v = qr();
  CHECK_THROWS_AS(induce_bb({}, v), EmptyStateSetError);

  // A singleton pins every world with paired bounds.
  BeliefBase pinned = induce_bb({bs({"1/4", "1/4", "1/4", "1/4"})}, v);
  std::vector<ProbFormula> expected = {
      pf("q & r", Rel::Le, "1/4", v),   pf("q & r", Rel::Ge, "1/4", v),
      pf("q & !r", Rel::Le, "1/4", v),  pf("q & !r", Rel::Ge, "1/4", v),
      pf("!q & r", Rel::Le, "1/4", v),  pf("!q & r", Rel::Ge, "1/4", v),
      pf("!q & !r", Rel::Le, "1/4", v), pf("!q & !r", Rel::Ge, "1/4", v)};
  CHECK(pinned.constraints() == expected);

  // States covering the full range per world suppress every bound.
  std::vector<BeliefState> covering = {bs({"1", "0", "0", "0"}), bs({"0", "1", "0", "0"}),
                                       bs({"0", "0", "1", "0"}), bs({"0", "0", "0", "1"})};
  CHECK(induce_bb(covering, v).constraints().empty());
}

TEST_CASE("induced bases are satisfied by every input state") {
  Vocabulary v = qr();
  std::mt19937 rng(7502);
  for (int trial = 0; trial < 15; ++trial) {
    BeliefBase base = testsupport::random_consistent_bb(rng, v);
    Formula alpha = testsupport::random_satisfiable_formula(rng, v, 2);
    auto revised =
        revise_boundary(boundary_states(base), alpha, StateRevision::GI, kHamming);
    BeliefBase induced = induce_bb(revised, v);
    for (const auto& b : revised) CHECK(bstate_satisfies(b, induced));
  }
}

TEST_CASE("full pipelines match the worked examples") {
  Vocabulary v = qr();
  Formula alpha = parse_formula("(q & !r) | (!q & r)", v);

  BeliefBase gi = revise_bb(b1(), alpha, BaseRevision::BoundaryGI, kHamming);
  CHECK(gi.constraints() == std::vector<ProbFormula>{
                                pf("q & r", Rel::Le, "0", v), pf("q & !r", Rel::Ge, "3/10", v),
                                pf("!q & r", Rel::Le, "7/10", v),
                                pf("!q & !r", Rel::Le, "0", v)});
  BeliefBase compact = BeliefBase::checked(
      v, {pf("(q & !r) | (!q & r)", Rel::Eq, "1", v), pf("q & !r", Rel::Ge, "0.3", v)});
  CHECK(equivalent(gi, compact));

  BeliefBase mci = revise_bb(b1(), alpha, BaseRevision::BoundaryMCI, kHamming);
  CHECK(mci.constraints() ==
        std::vector<ProbFormula>{pf("q & r", Rel::Le, "0", v), pf("!q & !r", Rel::Le, "0", v)});
  BeliefBase certain = BeliefBase::checked(v, {pf("(q & !r) | (!q & r)", Rel::Eq, "1", v)});
  CHECK(equivalent(mci, certain));

  BeliefBase maxent = revise_bb(b2(), parse_formula("!q", v), BaseRevision::MaxEntGI, kHamming);
  CHECK(maxent.constraints() ==
        std::vector<ProbFormula>{
            pf("q & r", Rel::Le, "0", v), pf("q & !r", Rel::Le, "0", v),
            pf("!q & r", Rel::Le, "3/5", v), pf("!q & r", Rel::Ge, "3/5", v),
            pf("!q & !r", Rel::Le, "2/5", v), pf("!q & !r", Rel::Ge, "2/5", v)});
}

TEST_CASE("boundary states attain the polytope envelopes exactly") {
  // Per world, the max/min probability over the whole polytope (LP route)
  // must be attained by some boundary state (enumeration route).
  Vocabulary v = qr();
  std::mt19937 rng(7503);
  for (int trial = 0; trial < 15; ++trial) {
    BeliefBase base = testsupport::random_consistent_bb(rng, v);
    BoundarySet set = boundary_states(base);
    LinearProgram lp = base.to_lp();
    for (World w : v.worlds()) {
      std::vector<Rational> unit(4, Rational(0));
      unit[w.index] = Rational(1);
      lp.set_objective(unit);
      Rational lp_max = optimize(lp, Direction::Maximize).value;
      Rational lp_min = optimize(lp, Direction::Minimize).value;
      Rational bnd_max = set.states.front().at(w), bnd_min = bnd_max;
      for (const auto& b : set.states) {
        bnd_max = std::max(bnd_max, b.at(w));
        bnd_min = std::min(bnd_min, b.at(w));
      }
      CHECK(bnd_max == lp_max);
      CHECK(bnd_min == lp_min);
    }
  }
}

TEST_CASE("revised boundary states attain the revised envelopes exactly") {
  // Imaging is linear in the source state, so the revised probability of a
  // world maximizes over the polytope as an LP. The revised boundary states
  // must reach that exact optimum.
  Vocabulary v = qr();
  std::mt19937 rng(7504);
  for (int trial = 0; trial < 15; ++trial) {
    BeliefBase base = testsupport::random_consistent_bb(rng, v);
    Formula alpha = testsupport::random_satisfiable_formula(rng, v, 2);
    GiMap map(alpha, kHamming, v);
    auto revised = revise_boundary(boundary_states(base), alpha, StateRevision::GI, kHamming);
    LinearProgram lp = base.to_lp();
    for (World w : v.worlds()) {
      std::vector<Rational> objective(4, Rational(0));
      for (std::uint32_t source = 0; source < 4; ++source) {
        const auto& targets = map.targets_of(source);
        if (std::find(targets.begin(), targets.end(), w.index) != targets.end()) {
          objective[source] = Rational(1, static_cast<long>(targets.size()));
        }
      }
      lp.set_objective(objective);
      Rational lp_max = optimize(lp, Direction::Maximize).value;
      Rational lp_min = optimize(lp, Direction::Minimize).value;
      Rational rev_max = revised.front().at(w), rev_min = rev_max;
      for (const auto& b : revised) {
        rev_max = std::max(rev_max, b.at(w));
        rev_min = std::min(rev_min, b.at(w));
      }
      CHECK(rev_max == lp_max);
      CHECK(rev_min == lp_min);
    }
  }
}

TEST_CASE("boundary enumeration is deterministic and thread-count independent") {
  Vocabulary v({"q", "r", "s"});
  BeliefBase base = BeliefBase::checked(
      v, {ProbFormula(parse_formula("q", v), Rel::Ge, rat("0.6"))});
  BoundaryOptions serial;
  serial.threads = 1;
  BoundaryOptions parallel;
  parallel.threads = 2;
  BoundarySet a = boundary_states(base, serial);
  BoundarySet b = boundary_states(base, parallel);
  CHECK(a.states == b.states);
  BoundarySet c = boundary_states(base, parallel);
  CHECK(b.states == c.states);
}
