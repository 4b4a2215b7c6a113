#include "credal/distance.hpp"

#include <bit>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <utility>

namespace credal {

int hamming(World a, World b) {
  return std::popcount(a.index ^ b.index);
}

PseudoDistance PseudoDistance::hamming_distance() {
  return PseudoDistance("hamming", [](World a, World b) { return hamming(a, b); });
}

PseudoDistance PseudoDistance::from_matrix(std::vector<std::vector<int>> matrix,
                                           std::string name) {
  auto shared = std::make_shared<std::vector<std::vector<int>>>(std::move(matrix));
  return PseudoDistance(std::move(name), [shared](World a, World b) {
    return shared->at(a.index).at(b.index);
  });
}

std::optional<std::string> check_axioms(const PseudoDistance& d, const Vocabulary& vocab) {
  auto ws = vocab.worlds();
  auto label = [&](World w) { return world_label(w, vocab); };
  for (World w : ws) {
    if (d(w, w) != 0) {
      return "identity violated: d(" + label(w) + "," + label(w) + ") != 0";
    }
    for (World w2 : ws) {
      if (d(w, w2) < 0) {
        return "non-negativity violated at (" + label(w) + "," + label(w2) + ")";
      }
      if (d(w, w2) != d(w2, w)) {
        return "symmetry violated at (" + label(w) + "," + label(w2) + ")";
      }
      if (w != w2 && d(w, w2) <= 0) {
        return "faithfulness violated: d(" + label(w) + "," + label(w2) + ") = 0";
      }
      for (World w3 : ws) {
        if (d(w, w2) + d(w2, w3) < d(w, w3)) {
          return "triangle inequality violated at (" + label(w) + "," + label(w2) + "," +
                 label(w3) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

PseudoDistance load_distance_matrix(std::istream& in, const Vocabulary& vocab,
                                    bool waive_validation) {
  std::size_t n = vocab.world_count();
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> matrix[i][j])) {
        throw DistanceAxiomError("distance matrix is not " + std::to_string(n) + "x" +
                                 std::to_string(n) + " integers");
      }
    }
  }
  PseudoDistance d = PseudoDistance::from_matrix(std::move(matrix), "matrix");
  if (vocab.size() <= 4) {
    if (auto violation = check_axioms(d, vocab)) {
      throw DistanceAxiomError(*violation);
    }
  } else if (!waive_validation) {
    throw DistanceAxiomError(
        "distance matrices over more than 4 atoms cannot be validated exhaustively; "
        "pass the waiver to use one anyway");
  }
  return d;
}

PseudoDistance load_distance_matrix_file(const std::string& path, const Vocabulary& vocab,
                                         bool waive_validation) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_distance_matrix(in, vocab, waive_validation);
}

std::vector<World> min_set(const Formula& alpha, World w, const PseudoDistance& d,
                           const Vocabulary& vocab) {
  auto alpha_worlds = models(alpha, vocab);
  if (alpha_worlds.empty()) {
    throw UnsatisfiableFormulaError("Min-set of an unsatisfiable formula");
  }
  int best = std::numeric_limits<int>::max();
  std::vector<World> out;
  for (World m : alpha_worlds) {
    int dist = d(m, w);
    if (dist < best) {
      best = dist;
      out.clear();
    }
    if (dist == best) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> min_set_sizes(const Formula& alpha, const PseudoDistance& d,
                                       const Vocabulary& vocab) {
  auto alpha_worlds = models(alpha, vocab);
  if (alpha_worlds.empty()) {
    throw UnsatisfiableFormulaError("Min-set sizes of an unsatisfiable formula");
  }
  std::vector<std::size_t> sizes(vocab.world_count(), 0);
  for (World w : vocab.worlds()) {
    int best = std::numeric_limits<int>::max();
    std::size_t count = 0;
    for (World m : alpha_worlds) {
      int dist = d(m, w);
      if (dist < best) {
        best = dist;
        count = 1;
      } else if (dist == best) {
        ++count;
      }
    }
    sizes[w.index] = count;
  }
  return sizes;
}

}  // namespace credal
