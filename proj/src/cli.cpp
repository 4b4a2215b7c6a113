#include "credal/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "credal/beliefs.hpp"
#include "credal/boundary.hpp"
#include "credal/distance.hpp"
#include "credal/entropy.hpp"
#include "credal/oracle.hpp"
#include "credal/revision.hpp"

namespace credal::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

PseudoDistance make_distance(const RunConfig& config, const Vocabulary& vocab) {
  if (!config.distance_matrix_path.empty()) {
    return load_distance_matrix_file(config.distance_matrix_path, vocab,
                                     config.waive_distance_validation);
  }
  if (config.distance == "hamming") return PseudoDistance::hamming_distance();
  throw Error("unknown distance '" + config.distance + "'");
}

BoundaryOptions boundary_options(const RunConfig& config, const Vocabulary& vocab,
                                 std::ostream& err) {
  BoundaryOptions opts;
  opts.max_worlds = config.max_worlds;
  if (config.max_worlds > 8 && vocab.world_count() > 8) {
    err << "warning: enumerating " << vocab.world_count()
        << "! permutations; this grows factorially\n";
  }
  return opts;
}

ordered_json state_to_json(const BeliefState& b) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < b.world_count(); ++i) arr.push_back(b.at(i).to_string());
  return arr;
}

ordered_json states_to_json(const std::vector<BeliefState>& states) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : states) arr.push_back(state_to_json(b));
  return arr;
}

ordered_json envelopes_to_json(const std::vector<BeliefState>& states, const Vocabulary& vocab) {
  ordered_json env = ordered_json::object();
  for (World w : vocab.worlds()) {
    Rational upper = states.front().at(w);
    Rational lower = upper;
    for (const auto& b : states) {
      upper = std::max(upper, b.at(w));
      lower = std::min(lower, b.at(w));
    }
    env[world_label(w, vocab)] = {{"lower", lower.to_string()}, {"upper", upper.to_string()}};
  }
  return env;
}

ordered_json base_to_json(const BeliefBase& base) {
  ordered_json arr = ordered_json::array();
  for (const auto& pf : base.constraints()) {
    arr.push_back({{"formula", pf.body().to_string()},
                   {"rel", rel_to_string(pf.rel())},
                   {"bound", pf.bound().to_string()}});
  }
  return arr;
}

ordered_json theorem1_to_json(const Theorem1Report& report) {
  return ordered_json{{"subset_ok", report.subset_ok},
                      {"attainment_ok", report.attainment_ok},
                      {"grid_gap_ok", report.grid_gap_ok},
                      {"grid_empty", report.grid_empty},
                      {"worst_subset_violation", report.worst_subset_violation.to_string()},
                      {"worst_gap", report.worst_gap.to_string()},
                      {"grid_size", report.grid_size},
                      {"boundary_size", report.boundary_size},
                      {"revised_boundary_size", report.revised_boundary_size},
                      {"passed", report.passed()}};
}

ordered_json postulates_to_json(const PostulateReport& report) {
  ordered_json holds = ordered_json::array();
  for (bool h : report.holds) holds.push_back(h);
  return ordered_json{{"holds", holds},
                      {"expansion_satisfiable", report.expansion_satisfiable},
                      {"alpha_equivalent_beta", report.alpha_equivalent_beta},
                      {"conjunction_satisfiable", report.conjunction_satisfiable},
                      {"union_after_satisfiable", report.union_after_satisfiable}};
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::optional<std::ofstream> file_;
  std::ostream& fallback_;
};

Formula parse_observation(const std::string& text, const Vocabulary& vocab) {
  Formula alpha = parse_formula(text, vocab);
  if (models(alpha, vocab).empty()) {
    throw UnsatisfiableFormulaError("observation '" + text + "' is unsatisfiable");
  }
  return alpha;
}

int cmd_revise(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BeliefBase base = read_belief_base_file(config.input_path);
  const Vocabulary& vocab = base.vocabulary();
  Formula alpha = parse_observation(config.observation, vocab);
  PseudoDistance d = make_distance(config, vocab);
  BoundaryOptions opts = boundary_options(config, vocab, err);

  std::vector<BeliefState> before;
  std::vector<BeliefState> revised;
  bool maxent_exact = true;

  if (config.method == "boundary-gi" || config.method == "boundary-mci") {
    BoundarySet set = boundary_states(base, opts);
    before = set.states;
    StateRevision method =
        config.method == "boundary-gi" ? StateRevision::GI : StateRevision::MCI;
    revised = revise_boundary(set, alpha, method, d);
  } else if (config.method == "maxent-gi") {
    MaxEntropyResult rep = max_entropy_detailed(base);
    maxent_exact = rep.exact;
    if (!rep.exact) {
      err << "note: max-entropy state was not representable exactly; carrying floats\n";
    }
    before = {rep.state};
    revised = {gi_revise(rep.state, alpha, d, vocab)};
  } else if (config.method == "bc") {
    if (config.state_path.empty()) {
      throw Error("--method bc requires --state with a belief-state file");
    }
    BeliefState b = read_belief_state_file(config.state_path, vocab);
    before = {b};
    revised = {bc_revise(b, alpha, vocab)};
  } else {
    throw Error("unknown method '" + config.method + "'");
  }

  BeliefBase induced = induce_bb(revised, vocab);

  std::optional<Theorem1Report> verify_report;
  if (config.verify) {
    verify_report = check_theorem1(base, alpha, d, config.grid_n, opts);
  }

  OutputTarget target(config.out_path, out);
  std::ostream& os = target.stream();
  if (config.format == "json") {
    ordered_json j{{"vocabulary", vocab.atoms()},
                   {"observation", alpha.to_string()},
                   {"method", config.method},
                   {"distance", d.name()}};
    ordered_json worlds = ordered_json::array();
    for (World w : vocab.worlds()) worlds.push_back(world_label(w, vocab));
    j["worlds"] = worlds;
    if (config.trace) j["states_before"] = states_to_json(before);
    j["revised_states"] = states_to_json(revised);
    j["envelopes"] = envelopes_to_json(revised, vocab);
    j["constraints"] = base_to_json(induced);
    if (config.method == "maxent-gi") j["maxent_exact"] = maxent_exact;
    if (verify_report) j["verify"] = theorem1_to_json(*verify_report);
    os << j.dump(2) << '\n';
  } else if (config.format == "bb") {
    if (config.trace) {
      os << "# states before revision (" << before.size() << "):\n";
      for (const auto& b : before) os << "#   " << b << '\n';
      os << "# states after revision (" << revised.size() << "):\n";
      for (const auto& b : revised) os << "#   " << b << '\n';
    }
    write_belief_base(os, induced);
    if (verify_report) {
      std::istringstream lines(to_text(*verify_report));
      std::string line;
      while (std::getline(lines, line)) os << "# " << line << '\n';
    }
  } else {
    throw Error("unknown format '" + config.format + "'");
  }
  return 0;
}

int cmd_boundary(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BeliefBase base = read_belief_base_file(config.input_path);
  BoundaryOptions opts = boundary_options(config, base.vocabulary(), err);
  BoundarySet set = boundary_states(base, opts);
  OutputTarget target(config.out_path, out);
  std::ostream& os = target.stream();
  if (config.format == "json") {
    ordered_json j{{"vocabulary", base.vocabulary().atoms()},
                   {"states", states_to_json(set.states)}};
    os << j.dump(2) << '\n';
  } else {
    for (const auto& b : set.states) os << b << '\n';
  }
  return 0;
}

int cmd_maxent(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BeliefBase base = read_belief_base_file(config.input_path);
  MaxEntropyResult rep = max_entropy_detailed(base);
  if (!rep.exact) {
    err << "note: max-entropy state was not representable exactly; carrying floats\n";
  }
  OutputTarget target(config.out_path, out);
  std::ostream& os = target.stream();
  if (config.format == "json") {
    ordered_json j{{"vocabulary", base.vocabulary().atoms()},
                   {"state", state_to_json(rep.state)},
                   {"exact", rep.exact},
                   {"entropy", shannon_entropy(rep.state)}};
    os << j.dump(2) << '\n';
  } else {
    os << rep.state << '\n';
  }
  return 0;
}

int cmd_entails(const RunConfig& config, std::ostream& out, std::ostream&) {
  BeliefBase base = read_belief_base_file(config.input_path);
  ProbFormula phi = parse_prob_formula(config.constraint_text, base.vocabulary());
  out << (entails(base, phi) ? "true" : "false") << '\n';
  return 0;
}

int cmd_equiv(const RunConfig& config, std::ostream& out, std::ostream&) {
  BeliefBase a = read_belief_base_file(config.input_path);
  BeliefBase b = read_belief_base_file(config.second_input_path);
  out << (equivalent(a, b) ? "true" : "false") << '\n';
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BeliefBase base = read_belief_base_file(config.input_path);
  const Vocabulary& vocab = base.vocabulary();
  Formula alpha = parse_observation(config.observation, vocab);
  PseudoDistance d = make_distance(config, vocab);
  BoundaryOptions opts = boundary_options(config, vocab, err);

  Theorem1Report report = check_theorem1(base, alpha, d, config.grid_n, opts);
  std::optional<PostulateReport> postulates;
  if (config.postulates) {
    if (config.beta.empty()) throw Error("--postulates requires --beta");
    Formula beta = parse_observation(config.beta, vocab);
    postulates = check_postulates(base, alpha, beta, BaseRevision::BoundaryGI, d, opts);
  }

  OutputTarget target(config.out_path, out);
  std::ostream& os = target.stream();
  if (config.format == "json") {
    ordered_json j{{"observation", alpha.to_string()},
                   {"grid_n", config.grid_n},
                   {"theorem1", theorem1_to_json(report)}};
    if (postulates) j["postulates"] = postulates_to_json(*postulates);
    os << j.dump(2) << '\n';
  } else {
    os << to_text(report);
    if (postulates) os << to_text(*postulates);
  }
  // Postulate results are findings, not expectations; only the theorem
  // check decides the exit code.
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "revise") return cmd_revise(config, out, err);
    if (config.command == "boundary") return cmd_boundary(config, out, err);
    if (config.command == "maxent") return cmd_maxent(config, out, err);
    if (config.command == "entails") return cmd_entails(config, out, err);
    if (config.command == "equiv") return cmd_equiv(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    err << "error: unknown command '" << config.command << "'\n";
    return 1;
  } catch (const ZeroProbabilityEvidenceError& e) {
    err << "error (revision undefined): " << e.what() << '\n';
    return 2;
  } catch (const RevisionUndefinedError& e) {
    err << "error (revision undefined): " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"belief-base revision with generalized imaging"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_distance_flags = [&](CLI::App* cmd) {
    cmd->add_option("--distance", config.distance, "world distance (hamming)")
        ->default_val("hamming");
    cmd->add_option("--distance-matrix", config.distance_matrix_path,
                    "file with a 2^n x 2^n integer distance matrix");
    cmd->add_flag("--force-distance", config.waive_distance_validation,
                  "skip axiom validation for large matrices");
  };
  auto add_boundary_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-worlds", config.max_worlds,
                    "permutation-enumeration guard (default 8)");
  };
  auto add_output_flags = [&](CLI::App* cmd, const std::string& formats) {
    cmd->add_option("--out", config.out_path, "write output to a file");
    cmd->add_option("--format", config.format, "output format (" + formats + ")");
  };

  CLI::App* revise = app.add_subcommand("revise", "revise a belief base with an observation");
  revise->add_option("input", config.input_path, "belief base file")->required();
  revise->add_option("--observe,-o", config.observation, "observation formula")->required();
  revise->add_option("--method", config.method,
                     "boundary-gi | boundary-mci | maxent-gi | bc")
      ->default_val("boundary-gi");
  revise->add_option("--state", config.state_path, "belief-state file (method bc)");
  revise->add_flag("--trace", config.trace, "also emit states before/after revision");
  revise->add_flag("--verify", config.verify, "append the brute-force theorem report");
  revise->add_option("--grid-n", config.grid_n, "grid resolution for --verify")
      ->default_val(20);
  add_distance_flags(revise);
  add_boundary_flags(revise);
  add_output_flags(revise, "bb | json");

  CLI::App* boundary = app.add_subcommand("boundary", "enumerate boundary belief states");
  boundary->add_option("input", config.input_path, "belief base file")->required();
  add_boundary_flags(boundary);
  add_output_flags(boundary, "bb | json");

  CLI::App* maxent = app.add_subcommand("maxent", "most entropic satisfying belief state");
  maxent->add_option("input", config.input_path, "belief base file")->required();
  add_output_flags(maxent, "bb | json");

  CLI::App* entails_cmd = app.add_subcommand("entails", "does the base entail a constraint?");
  entails_cmd->add_option("input", config.input_path, "belief base file")->required();
  entails_cmd->add_option("constraint", config.constraint_text, "e.g. \"P(q) >= 0.6\"")
      ->required();

  CLI::App* equiv = app.add_subcommand("equiv", "are two belief bases equivalent?");
  equiv->add_option("input", config.input_path, "belief base file")->required();
  equiv->add_option("other", config.second_input_path, "belief base file")->required();

  CLI::App* verify = app.add_subcommand("verify", "brute-force revision checks");
  verify->add_option("input", config.input_path, "belief base file")->required();
  verify->add_option("--observe,-o", config.observation, "observation formula")->required();
  verify->add_option("--grid-n", config.grid_n, "grid resolution")->default_val(20);
  verify->add_flag("--postulates", config.postulates, "also run the postulate harness");
  verify->add_option("--beta", config.beta, "second observation for the postulates");
  add_distance_flags(verify);
  add_boundary_flags(verify);
  add_output_flags(verify, "text | json");
  verify->parse_complete_callback([&] { if (config.format == "bb") config.format = "text"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  config.command = app.get_subcommands().front()->get_name();
  return run(config, std::cout, std::cerr);
}

}  // namespace credal::cli
