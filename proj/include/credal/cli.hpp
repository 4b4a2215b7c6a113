#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace credal::cli {

/// One resolved invocation. `command` selects the pipeline; unused fields
/// are ignored by the other commands.
struct RunConfig {
  std::string command;                 // revise | boundary | maxent | entails | equiv | verify
  std::string input_path;
  std::string second_input_path;       // equiv: the other belief base
  std::string observation;             // revise / verify
  std::string constraint_text;         // entails: "P(q) >= 0.6"
  std::string method = "boundary-gi";  // revise: boundary-gi | boundary-mci | maxent-gi | bc
  std::string distance = "hamming";
  std::string distance_matrix_path;    // overrides `distance` when set
  bool waive_distance_validation = false;
  std::string state_path;              // bc input state
  std::string out_path;                // empty = stdout
  std::string format = "bb";           // bb | json (verify: text | json)
  bool trace = false;
  bool verify = false;
  std::size_t grid_n = 20;
  std::size_t max_worlds = 8;
  bool postulates = false;             // verify: also run the postulate harness
  std::string beta;                    // verify --postulates second observation
};

/// Exit codes: 0 success, 1 input error, 2 undefined revision.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv);

}  // namespace credal::cli
