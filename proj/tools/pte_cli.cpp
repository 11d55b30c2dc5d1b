// Command-line front end: solve single games, classify them, sample seeded
// batches, run mass scans, verify the inclusion theorems, and evaluate
// Newcomb-style problems under the three decision theories.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pte/analysis.hpp"
#include "pte/corpus.hpp"
#include "pte/newcomb.hpp"
#include "pte/reports.hpp"
#include "pte/text_format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

pte::Game load_game(const std::string& path) {
  try {
    return pte::parse_game(read_file(path));
  } catch (const pte::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> shape;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find_first_of("xX", start);
    const std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      const int value = std::stoi(part);
      if (value <= 0 || std::to_string(value) != part) throw std::invalid_argument(part);
      shape.push_back(value);
    } catch (const std::exception&) {
      throw InputError("bad shape '" + text + "', expected e.g. 3x3");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (shape.empty()) throw InputError("bad shape '" + text + "'");
  return shape;
}

pte::Rational parse_probability(const std::string& text, const char* what) {
  try {
    return pte::Rational::parse(text);
  } catch (const std::exception&) {
    throw InputError(std::string("bad ") + what + " '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(',', start);
    parts.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string payoff_text(const pte::PayoffVector& payoffs) {
  std::string out = "(";
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (i > 0) out += ", ";
    out += payoffs[i].str();
  }
  return out + ")";
}

std::string profile_line(const pte::Game& game, std::size_t index) {
  return game.profile_name(game.profile_at(index)) + " " + payoff_text(game.payoff_vector(index));
}

void print_profile_set(const pte::Game& game, const std::string& title, const std::vector<std::size_t>& set) {
  std::cout << title << ":";
  if (set.empty()) std::cout << " none";
  for (const std::size_t p : set) std::cout << " " << profile_line(game, p);
  std::cout << "\n";
}

void print_trace(const pte::Game& game, const pte::EliminationTrace& trace) {
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const auto& round = trace.rounds[k];
    std::cout << "round " << (k + 1) << ": maximin " << payoff_text(round.maximin) << "; eliminated";
    if (round.eliminated.empty()) std::cout << " nothing";
    for (const std::size_t p : round.eliminated) std::cout << " " << game.profile_name(game.profile_at(p));
    std::cout << "\n";
  }
}

void print_pte(const pte::Game& game, const pte::PteResult& result, bool with_trace) {
  std::cout << "pte: ";
  switch (result.outcome) {
    case pte::PteOutcome::unique:
      std::cout << "unique " << profile_line(game, result.fixpoint.front());
      break;
    case pte::PteOutcome::no_equilibrium:
      std::cout << "none (every profile is eventually preempted)";
      break;
    case pte::PteOutcome::ambiguous:
      std::cout << "ambiguous fixpoint of " << result.fixpoint.size() << " profiles:";
      for (const std::size_t p : result.fixpoint) std::cout << " " << profile_line(game, p);
      break;
  }
  std::cout << " [" << result.trace.rounds.size() << " rounds]\n";
  if (with_trace) print_trace(game, result.trace);
}

void print_minimax(const pte::Game& game, const pte::ActiveStrategySets& sets) {
  std::cout << "minimax-rationalizable strategies:";
  for (int i = 0; i < game.player_count(); ++i) {
    std::cout << " player" << i << "{";
    const auto active = sets.active_strategies(i);
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k > 0) std::cout << ",";
      std::cout << game.strategy_name(i, active[k]);
    }
    std::cout << "}";
  }
  std::cout << "\n";
}

int cmd_solve(const std::string& file, const std::string& concept_name, bool lenient, bool with_trace) {
  const pte::Game game = load_game(file);
  const bool all = concept_name == "all";

  if (all || concept_name == "pte")
    print_pte(game, pte::pte_solve(game, lenient ? pte::TieHandling::lenient : pte::TieHandling::strict),
              with_trace);
  if (all || concept_name == "nash") print_profile_set(game, "nash", pte::nash_pure_set(game));
  if (all || concept_name == "ir")
    print_profile_set(game, "individually rational", pte::individually_rational_set(game).indices());
  if (all || concept_name == "te") print_profile_set(game, "translucent", pte::translucent_set(game).indices());
  if (all || concept_name == "minimax") print_minimax(game, pte::minimax_rationalizable(game));
  if (concept_name == "hofstadter") {
    const pte::StrategyProfile h = pte::hofstadter_equilibrium(game);
    std::cout << "hofstadter: " << profile_line(game, game.profile_index(h)) << "\n";
  } else if (all) {
    try {
      const pte::StrategyProfile h = pte::hofstadter_equilibrium(game);
      std::cout << "hofstadter: " << profile_line(game, game.profile_index(h)) << "\n";
    } catch (const pte::PreconditionError& e) {
      std::cout << "hofstadter: n/a (" << e.what() << ")\n";
    }
  }
  if (all || concept_name == "pareto") print_profile_set(game, "pareto optimal", pte::pareto_optimal_set(game));
  return kExitOk;
}

int cmd_classify(const std::string& file, const std::string& format) {
  const pte::Game game = load_game(file);
  const pte::GameReport report = pte::classify(game);
  if (format == "records") {
    std::cout << pte::report_to_json(game, report, /*with_trace=*/true).dump() << "\n";
    return kExitOk;
  }
  std::cout << "general position: " << (report.general_position ? "yes" : "no") << "\n";
  if (report.tie)
    std::cout << "  tie: player " << report.tie->player << " between "
              << game.profile_name(game.profile_at(report.tie->profile_a)) << " and "
              << game.profile_name(game.profile_at(report.tie->profile_b)) << "\n";
  std::cout << "symmetric: " << (!report.symmetry_checked ? "unchecked" : report.symmetric ? "yes" : "no") << "\n";
  print_pte(game, report.pte, /*with_trace=*/false);
  print_profile_set(game, "nash", report.nash);
  print_profile_set(game, "individually rational", report.individually_rational);
  print_profile_set(game, "translucent", report.translucent);
  print_profile_set(game, "pareto optimal", report.pareto_optimal);
  print_minimax(game, report.minimax_active);
  if (report.hofstadter)
    std::cout << "hofstadter: " << profile_line(game, game.profile_index(*report.hofstadter)) << "\n";
  else if (report.hofstadter_refusal)
    std::cout << "hofstadter: n/a (" << *report.hofstadter_refusal << ")\n";
  std::cout << "social dilemma: " << (report.social_dilemma ? "yes" : "no") << "\n";
  if (!report.violations.empty()) {
    std::cout << "VIOLATIONS:\n";
    for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
  }
  return kExitOk;
}

int cmd_sample(const std::string& shape_text, std::uint64_t count, std::uint64_t seed, const std::string& out_dir,
               bool symmetric) {
  pte::SampleConfig config{parse_shape(shape_text), count, seed, symmetric};
  config.validate();
  std::filesystem::create_directories(out_dir);
  const std::size_t width = std::to_string(count == 0 ? 1 : count - 1).size();
  for (std::uint64_t index = 0; index < count; ++index) {
    std::string number = std::to_string(index);
    number.insert(number.begin(), width - number.size(), '0');
    const std::filesystem::path path = std::filesystem::path(out_dir) / ("game_" + number + ".game");
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << pte::serialize_game(pte::sample_from_config(config, index));
  }
  std::cout << "wrote " << count << " games to " << out_dir << "\n";
  return kExitOk;
}

int cmd_scan(const std::string& shape_text, std::uint64_t count, std::uint64_t seed, int workers,
             const std::string& report_file, const std::string& counterexample_file, bool symmetric) {
  pte::SampleConfig config{parse_shape(shape_text), count, seed, symmetric};
  config.validate();
  const pte::ScanResult result = pte::scan(config, workers);

  {
    std::ofstream out(report_file);
    if (!out) throw InputError("cannot write '" + report_file + "'");
    out << pte::scan_report_text(result);
  }
  {
    std::ofstream out(counterexample_file);
    if (!out) throw InputError("cannot write '" + counterexample_file + "'");
    out << pte::findings_text(result);
  }

  const auto& stats = result.stats;
  std::cout << "scanned " << stats.games << " games (shape " << shape_text << ", seed " << seed << ")\n";
  if (stats.games > 0) {
    std::cout << "  with pte:                        " << stats.with_pte << " ("
              << 100.0 * static_cast<double>(stats.with_pte) / static_cast<double>(stats.games) << "%)\n";
    std::cout << "  pte not minimax-rationalizable:  " << stats.pte_not_minimax_rationalizable << "\n";
    std::cout << "  pte is a nash equilibrium:       " << stats.pte_is_nash << "\n";
    std::cout << "  pte strictly improves some nash: " << stats.pte_strictly_improves_some_nash << "\n";
    std::cout << "  social dilemmas:                 " << stats.social_dilemmas << "\n";
    std::cout << "  property violations:             " << stats.violations << "\n";
  }
  std::cout << "report: " << report_file << "\ncounterexamples: " << counterexample_file << " ("
            << result.findings.size() << " records)\n";
  return stats.violations == 0 ? kExitOk : kExitPrecondition;
}

int cmd_verify(const std::string& file) {
  const pte::Game game = load_game(file);
  const std::vector<std::string> violations = pte::verify_inclusions(game);
  if (violations.empty()) {
    std::cout << "ok: all inclusion checks hold\n";
    return kExitOk;
  }
  for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
  return kExitPrecondition;
}

int cmd_newcomb(const std::string& theory_name, const std::string& prior, const std::string& accuracy,
                const std::string& payoffs, const std::string& sweep) {
  pte::NewcombProblem problem = pte::NewcombProblem::canonical();
  if (!payoffs.empty()) {
    const auto parts = split_list(payoffs);
    if (parts.size() != 4) throw InputError("--payoffs needs two_full,one_full,two_empty,one_empty");
    problem.payoff_two_full = parse_probability(parts[0], "payoff");
    problem.payoff_one_full = parse_probability(parts[1], "payoff");
    problem.payoff_two_empty = parse_probability(parts[2], "payoff");
    problem.payoff_one_empty = parse_probability(parts[3], "payoff");
  }
  if (!prior.empty()) problem.prior_full = parse_probability(prior, "prior");
  if (!accuracy.empty()) problem.accuracy = parse_probability(accuracy, "accuracy");

  pte::DecisionTheory theory;
  if (theory_name == "cdt")
    theory = pte::DecisionTheory::cdt;
  else if (theory_name == "edt")
    theory = pte::DecisionTheory::edt;
  else if (theory_name == "nndt")
    theory = pte::DecisionTheory::nndt;
  else
    throw InputError("unknown theory '" + theory_name + "'");

  const auto print_verdict = [](const pte::TheoryVerdict& verdict) {
    std::cout << "E[one-box] = " << verdict.expected_one.str() << "  E[two-box] = " << verdict.expected_two.str()
              << "  -> " << (verdict.tie ? "tie" : to_string(*verdict.recommendation)) << "\n";
  };

  if (!sweep.empty()) {
    std::vector<pte::Rational> grid;
    for (const std::string& part : split_list(sweep))
      grid.push_back(parse_probability(part, "sweep value"));
    const char* parameter = theory == pte::DecisionTheory::cdt ? "prior" : "accuracy";
    for (const pte::SweepPoint& point : pte::recommendation_sweep(problem, theory, grid)) {
      std::cout << parameter << " = " << point.parameter.str() << ": ";
      print_verdict(point.verdict);
    }
    return kExitOk;
  }

  std::cout << to_string(theory) << " (prior " << problem.prior_full.str() << ", accuracy "
            << problem.accuracy.str() << "): ";
  print_verdict(pte::expected_utilities(problem, theory));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for transparent solution concepts on finite normal-form games"};
  app.require_subcommand(1);

  std::string file, concept_name = "all", format = "text", shape, out_dir, report_file, counterexample_file;
  std::string theory, prior, accuracy, payoffs, sweep;
  std::uint64_t count = 0, seed = 0;
  int workers = 1;
  bool lenient = false, with_trace = false, symmetric = false;

  auto* solve = app.add_subcommand("solve", "Solve one game file for a solution concept");
  solve->add_option("file", file)->required();
  solve->add_option("--concept", concept_name)->check(CLI::IsMember({"pte", "nash", "ir", "te", "minimax", "hofstadter", "pareto", "all"}));
  solve->add_flag("--lenient", lenient, "allow tied payoffs in the pte solver");
  solve->add_flag("--trace", with_trace, "print every elimination round");

  auto* classify = app.add_subcommand("classify", "Run every solver and print a full report");
  classify->add_option("file", file)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

  auto* sample = app.add_subcommand("sample", "Write seeded random games to a directory");
  sample->add_option("--shape", shape, "strategy counts, e.g. 3x3")->required();
  sample->add_option("--count", count)->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_dir)->required();
  sample->add_flag("--symmetric", symmetric);

  auto* scan = app.add_subcommand("scan", "Classify a seeded batch and aggregate statistics");
  scan->add_option("--shape", shape)->required();
  scan->add_option("--count", count)->required();
  scan->add_option("--seed", seed)->required();
  scan->add_option("--workers", workers);
  scan->add_option("--report", report_file)->required();
  scan->add_option("--counterexamples", counterexample_file)->required();
  scan->add_flag("--symmetric", symmetric);

  auto* verify = app.add_subcommand("verify", "Check the inclusion theorems on one game");
  verify->add_option("file", file)->required();

  auto* newcomb = app.add_subcommand("newcomb", "Expected utilities of a Newcomb-style problem");
  newcomb->add_option("--theory", theory)->required()->check(CLI::IsMember({"cdt", "edt", "nndt"}));
  newcomb->add_option("--prior", prior, "P(opaque box full), used by cdt");
  newcomb->add_option("--accuracy", accuracy, "predictor accuracy, used by edt/nndt");
  newcomb->add_option("--payoffs", payoffs, "two_full,one_full,two_empty,one_empty");
  newcomb->add_option("--sweep", sweep, "comma-separated parameter grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(file, concept_name, lenient, with_trace);
    if (classify->parsed()) return cmd_classify(file, format);
    if (sample->parsed()) return cmd_sample(shape, count, seed, out_dir, symmetric);
    if (scan->parsed()) return cmd_scan(shape, count, seed, workers, report_file, counterexample_file, symmetric);
    if (verify->parsed()) return cmd_verify(file);
    if (newcomb->parsed()) return cmd_newcomb(theory, prior, accuracy, payoffs, sweep);
  } catch (const pte::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const pte::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
