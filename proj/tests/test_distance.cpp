#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "credal/distance.hpp"
#include "support/generators.hpp"

using namespace credal;

namespace {

Vocabulary qrs() { return Vocabulary({"q", "r", "s"}); }

std::set<std::string> min_set_labels(const Formula& alpha, const std::string& from,
                                     const Vocabulary& v) {
  std::set<std::string> out;
  for (World w : min_set(alpha, world_from_label(from, v), PseudoDistance::hamming_distance(), v)) {
    out.insert(world_label(w, v));
  }
  return out;
}

std::string hamming_matrix_text(const Vocabulary& v, int scale) {
  std::ostringstream os;
  for (World a : v.worlds()) {
    for (World b : v.worlds()) os << scale * hamming(a, b) << ' ';
    os << '\n';
  }
  return os.str();
}

}  // namespace

TEST_CASE("hamming basics") {
  Vocabulary v = qrs();
  CHECK(hamming(world_from_label("110", v), world_from_label("101", v)) == 2);
  CHECK(hamming(world_from_label("100", v), world_from_label("110", v)) == 1);
  for (World w : v.worlds()) CHECK(hamming(w, w) == 0);
}

TEST_CASE("hamming satisfies all five axioms exhaustively up to 4 atoms") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    Vocabulary v(atoms);
    CHECK_FALSE(check_axioms(PseudoDistance::hamming_distance(), v).has_value());
  }
}

TEST_CASE("Min-sets of the running example, all eight worlds") {
  Vocabulary v = qrs();
  Formula alpha = parse_formula("(q & r) | (q & !r & s)", v);
  CHECK(min_set_labels(alpha, "111", v) == std::set<std::string>{"111"});
  CHECK(min_set_labels(alpha, "110", v) == std::set<std::string>{"110"});
  CHECK(min_set_labels(alpha, "101", v) == std::set<std::string>{"101"});
  CHECK(min_set_labels(alpha, "100", v) == std::set<std::string>{"110", "101"});
  CHECK(min_set_labels(alpha, "011", v) == std::set<std::string>{"111"});
  CHECK(min_set_labels(alpha, "010", v) == std::set<std::string>{"110"});
  CHECK(min_set_labels(alpha, "001", v) == std::set<std::string>{"101"});
  CHECK(min_set_labels(alpha, "000", v) == std::set<std::string>{"110", "101"});
}

TEST_CASE("Min-set of a world already satisfying the formula is that world") {
  Vocabulary v = qrs();
  PseudoDistance d = PseudoDistance::hamming_distance();
  std::mt19937 rng(7300);
  for (int i = 0; i < 100; ++i) {
    Formula f = testsupport::random_satisfiable_formula(rng, v, 3);
    for (World w : models(f, v)) {
      auto ms = min_set(f, w, d, v);
      REQUIRE(ms.size() == 1);
      CHECK(ms.front() == w);
    }
  }
}

TEST_CASE("Min-set is nonempty for satisfiable formulas and throws otherwise") {
  Vocabulary v = qrs();
  PseudoDistance d = PseudoDistance::hamming_distance();
  std::mt19937 rng(7301);
  for (int i = 0; i < 100; ++i) {
    Formula f = testsupport::random_satisfiable_formula(rng, v, 3);
    for (World w : v.worlds()) CHECK_FALSE(min_set(f, w, d, v).empty());
  }
  CHECK_THROWS_AS(min_set(Formula::falsity(), World{0}, d, v), UnsatisfiableFormulaError);
  CHECK_THROWS_AS(min_set_sizes(Formula::falsity(), d, v), UnsatisfiableFormulaError);
}

TEST_CASE("Min-set sizes") {
  Vocabulary v = qrs();
  PseudoDistance d = PseudoDistance::hamming_distance();
  Formula alpha = parse_formula("(q & r) | (q & !r & s)", v);
  CHECK(min_set_sizes(alpha, d, v) == std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1, 2});
  CHECK(min_set_sizes(Formula::truth(), d, v) == std::vector<std::size_t>(8, 1));

  Vocabulary v2({"q", "r"});
  Formula sym = parse_formula("(q & !r) | (!q & r)", v2);
  CHECK(min_set_sizes(sym, d, v2) == std::vector<std::size_t>{2, 1, 1, 2});
}

TEST_CASE("distance matrix loading validates the axioms") {
  Vocabulary v({"q", "r"});
  // A scaled Hamming matrix is still a pseudo-distance and yields the same
  // Min-sets.
  std::istringstream ok(hamming_matrix_text(v, 2));
  PseudoDistance scaled = load_distance_matrix(ok, v);
  Formula alpha = parse_formula("q & r", v);
  for (World w : v.worlds()) {
    CHECK(min_set(alpha, w, scaled, v) ==
          min_set(alpha, w, PseudoDistance::hamming_distance(), v));
  }

  std::istringstream asymmetric("0 1 2 1  1 0 1 2  1 1 0 1  1 2 1 0");
  CHECK_THROWS_AS(load_distance_matrix(asymmetric, v), DistanceAxiomError);

  std::istringstream unfaithful("0 0 1 2  0 0 1 1  1 1 0 1  2 1 1 0");
  CHECK_THROWS_AS(load_distance_matrix(unfaithful, v), DistanceAxiomError);

  std::istringstream triangle("0 1 1 9  1 0 1 1  1 1 0 1  9 1 1 0");
  CHECK_THROWS_AS(load_distance_matrix(triangle, v), DistanceAxiomError);

  std::istringstream truncated("0 1 1");
  CHECK_THROWS_AS(load_distance_matrix(truncated, v), DistanceAxiomError);
}

TEST_CASE("matrices past the validation guard need the waiver") {
  Vocabulary big({"a", "b", "c", "d", "e"});
  std::string text = hamming_matrix_text(big, 1);
  std::istringstream rejected(text);
  CHECK_THROWS_AS(load_distance_matrix(rejected, big), DistanceAxiomError);
  std::istringstream waived(text);
  PseudoDistance d = load_distance_matrix(waived, big, /*waive_validation=*/true);
  CHECK(d(World{0}, World{31}) == 5);
}
