#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "credal/lp.hpp"
#include "credal/rational.hpp"
#include "support/oracles.hpp"

using namespace credal;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

// B1 = {(q) >= 0.6} over <11,10,01,00>: coefficient 1 on the two q-worlds.
LinearProgram b1_lp() {
  LinearProgram lp(4);
  lp.add_constraint({Rational(1), Rational(1), Rational(0), Rational(0)}, Rel::Ge, rat("0.6"));
  return lp;
}

// B2 = {(!q & !r) = 0.1}.
LinearProgram b2_lp() {
  LinearProgram lp(4);
  lp.add_constraint({Rational(0), Rational(0), Rational(0), Rational(1)}, Rel::Eq, rat("0.1"));
  return lp;
}

std::vector<std::vector<Rational>> unit_objectives(std::initializer_list<int> order) {
  std::vector<std::vector<Rational>> out;
  for (int i : order) {
    std::vector<Rational> unit(4, Rational(0));
    unit[static_cast<std::size_t>(i)] = Rational(1);
    out.push_back(std::move(unit));
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat("0.61") == Rational(61, 100));
  CHECK(rat("3/6") == Rational(1, 2));
  CHECK(rat("3/6").to_string() == "1/2");
  CHECK(rat("1") == Rational(1));
  CHECK(rat("-0.5") == Rational(-1, 2));
  CHECK(rat(".25") == Rational(1, 4));
  CHECK(rat(" 7/10 ") == Rational(7, 10));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(61, 100).to_string() == "61/100");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK_THROWS_AS(rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat(""), std::invalid_argument);
  CHECK_THROWS_AS(rat("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(abs(rat("-3/4")) == rat("3/4"));
  CHECK(rat("1/3") + rat("1/6") == rat("1/2"));
  CHECK(rat("1/3") * rat("3/5") == rat("1/5"));
}

TEST_CASE("feasibility") {
  CHECK(is_feasible(b1_lp()));
  CHECK(is_feasible(LinearProgram(4)));  // empty constraint set

  LinearProgram contradictory(4);
  contradictory.add_constraint({Rational(1), Rational(1), Rational(0), Rational(0)}, Rel::Ge,
                               rat("0.6"));
  contradictory.add_constraint({Rational(1), Rational(1), Rational(0), Rational(0)}, Rel::Le,
                               rat("0.5"));
  CHECK_FALSE(is_feasible(contradictory));
}

TEST_CASE("optimize bounds the q-mass of B1") {
  LinearProgram lp = b1_lp();
  lp.set_objective({Rational(1), Rational(1), Rational(0), Rational(0)});
  CHECK(optimize(lp, Direction::Maximize).value == Rational(1));
  CHECK(optimize(lp, Direction::Minimize).value == rat("0.6"));

  Optimum low = optimize(lp, Direction::Minimize);
  Rational attained = low.witness[0] + low.witness[1];
  CHECK(attained == rat("3/5"));
  Rational sum(0);
  for (const auto& v : low.witness) {
    CHECK(v.sign() >= 0);
    sum += v;
  }
  CHECK(sum == Rational(1));
}

TEST_CASE("optimize reproduces the Example 7 envelope value") {
  LinearProgram lp = b2_lp();
  lp.set_objective({Rational(0), Rational(0), Rational(1), Rational(0)});
  CHECK(optimize(lp, Direction::Maximize).value == rat("0.9"));
}

TEST_CASE("optimize on an empty polytope throws") {
  LinearProgram lp(3);
  lp.add_constraint({Rational(1), Rational(0), Rational(0)}, Rel::Ge, Rational(1));
  lp.add_constraint({Rational(1), Rational(0), Rational(0)}, Rel::Le, rat("1/2"));
  CHECK_THROWS_AS(optimize(lp, Direction::Maximize), InfeasibleError);
}

TEST_CASE("lexicographic maximization matches Example 3") {
  // Objectives in the order <01, 00, 11, 10>.
  auto witness = lex_maximize(b1_lp(), unit_objectives({2, 3, 0, 1}));
  CHECK(witness == std::vector<Rational>{rat("0.6"), Rational(0), rat("0.4"), Rational(0)});
}

TEST_CASE("lexicographic maximization, unconstrained greedy") {
  auto witness = lex_maximize(LinearProgram(4), unit_objectives({3, 1, 0, 2}));
  CHECK(witness == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("lexicographic maximization on B2") {
  auto witness = lex_maximize(b2_lp(), unit_objectives({0, 1, 2, 3}));
  CHECK(witness == std::vector<Rational>{rat("0.9"), Rational(0), Rational(0), rat("0.1")});
}

TEST_CASE("lexicographic maximization signals infeasibility") {
  LinearProgram lp(4);
  lp.add_constraint({Rational(1), Rational(0), Rational(0), Rational(0)}, Rel::Ge, Rational(1));
  lp.add_constraint({Rational(1), Rational(0), Rational(0), Rational(0)}, Rel::Le, rat("1/2"));
  CHECK_THROWS_AS(lex_maximize(lp, unit_objectives({0, 1, 2, 3})), InfeasibleError);
}

TEST_CASE("optimize agrees with vertex enumeration on random programs") {
  std::mt19937 rng(7100);
  std::uniform_int_distribution<int> mdist(3, 8);
  std::uniform_int_distribution<int> ncons(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> reldist(0, 2);
  std::uniform_int_distribution<long> tick(0, 10);
  std::uniform_int_distribution<long> obj(-3, 3);

  int feasible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = static_cast<std::size_t>(mdist(rng));
    LinearProgram lp(m);
    int n = ncons(rng);
    for (int c = 0; c < n; ++c) {
      std::vector<Rational> coeffs(m);
      for (auto& v : coeffs) v = Rational(coin(rng));
      int which = reldist(rng);
      Rel rel = which == 0 ? Rel::Le : which == 1 ? Rel::Eq : Rel::Ge;
      lp.add_constraint(std::move(coeffs), rel, Rational(tick(rng), 10));
    }
    std::vector<Rational> objective(m);
    for (auto& v : objective) v = Rational(obj(rng));
    lp.set_objective(std::move(objective));

    if (!is_feasible(lp)) continue;
    ++feasible_seen;
    auto expected_max = testsupport::vertex_enumeration_optimum(lp, Direction::Maximize);
    auto expected_min = testsupport::vertex_enumeration_optimum(lp, Direction::Minimize);
    REQUIRE(expected_max.has_value());
    REQUIRE(expected_min.has_value());
    CHECK(optimize(lp, Direction::Maximize).value == *expected_max);
    CHECK(optimize(lp, Direction::Minimize).value == *expected_min);
  }
  CHECK(feasible_seen > 50);
}

TEST_CASE("lex_maximize result is insensitive to constraint order") {
  std::mt19937 rng(7101);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> reldist(0, 2);
  std::uniform_int_distribution<long> tick(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LinearConstraint> rows;
    for (int c = 0; c < 3; ++c) {
      std::vector<Rational> coeffs(4);
      for (auto& v : coeffs) v = Rational(coin(rng));
      int which = reldist(rng);
      Rel rel = which == 0 ? Rel::Le : which == 1 ? Rel::Eq : Rel::Ge;
      rows.push_back(LinearConstraint{std::move(coeffs), rel, Rational(tick(rng), 10)});
    }
    LinearProgram forward(4), backward(4);
    for (const auto& r : rows) forward.add_constraint(r.coeffs, r.rel, r.bound);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      backward.add_constraint(it->coeffs, it->rel, it->bound);
    }
    if (!is_feasible(forward)) continue;
    auto objectives = unit_objectives({2, 0, 3, 1});
    CHECK(lex_maximize(forward, objectives) == lex_maximize(backward, objectives));
  }
}
