#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pte/analysis.hpp"
#include "pte/newcomb.hpp"
#include "pte/reports.hpp"
#include "pte/text_format.hpp"

namespace pte {

/// Key-order-insensitive JSON used for expectation comparison.
using ujson = nlohmann::json;

struct CorpusOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
};

namespace detail {

inline void expect_eq(CorpusOutcome& outcome, const std::string& field, const ujson& expected, const ujson& actual) {
  if (expected != actual)
    outcome.failures.push_back(field + ": expected " + expected.dump() + ", got " + actual.dump());
}

inline ujson sorted_profiles(const Game& game, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  return ujson(profiles_to_json(game, indices));
}

inline ujson pte_expectation_view(const Game& game, const PteResult& result) {
  ujson out;
  switch (result.outcome) {
    case PteOutcome::unique:
      out["outcome"] = "unique";
      out["profile"] = profile_to_json(*result.equilibrium);
      out["payoffs"] = payoffs_to_json(game.payoff_vector(game.profile_index(*result.equilibrium)));
      break;
    case PteOutcome::no_equilibrium:
      out["outcome"] = "none";
      break;
    case PteOutcome::ambiguous:
      out["outcome"] = "ambiguous";
      out["fixpoint"] = profiles_to_json(game, result.fixpoint);
      break;
  }
  return out;
}

inline CorpusOutcome run_game_entry(const std::filesystem::path& dir, const ujson& entry) {
  CorpusOutcome outcome;
  outcome.name = entry.at("name").get<std::string>();
  const std::filesystem::path file = dir / entry.at("file").get<std::string>();
  std::ifstream in(file);
  if (!in) {
    outcome.failures.push_back("missing corpus file " + file.string());
    return outcome;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  const Game game = parse_game(buffer.str());
  const ujson& expect = entry.at("expect");
  const GameReport report = classify(game);

  expect_eq(outcome, "general_position", expect.at("general_position"), report.general_position);
  expect_eq(outcome, "symmetric", expect.at("symmetric"), report.symmetric);
  expect_eq(outcome, "nash", expect.at("nash"), sorted_profiles(game, report.nash));
  expect_eq(outcome, "individually_rational", expect.at("individually_rational"),
            sorted_profiles(game, report.individually_rational));
  expect_eq(outcome, "translucent", expect.at("translucent"), sorted_profiles(game, report.translucent));
  expect_eq(outcome, "pareto_optimal", expect.at("pareto_optimal"), sorted_profiles(game, report.pareto_optimal));
  expect_eq(outcome, "social_dilemma", expect.at("social_dilemma"), report.social_dilemma);

  ujson minimax = ujson::array();
  for (int i = 0; i < game.player_count(); ++i) minimax.push_back(report.minimax_active.active_strategies(i));
  expect_eq(outcome, "minimax_rationalizable", expect.at("minimax_rationalizable"), minimax);

  ujson hofstadter;
  if (report.hofstadter) {
    hofstadter["profile"] = profile_to_json(*report.hofstadter);
    hofstadter["payoffs"] = payoffs_to_json(game.payoff_vector(game.profile_index(*report.hofstadter)));
  } else {
    hofstadter["error"] = report.symmetric ? "diagonal_ties" : "not_symmetric";
  }
  expect_eq(outcome, "hofstadter", expect.at("hofstadter"), hofstadter);

  // The elimination is solved in the entry's own mode; tied entries must also
  // be rejected by strict mode.
  const bool lenient = expect.at("pte_mode").get<std::string>() == "lenient";
  const PteResult solved = pte_solve(game, lenient ? TieHandling::lenient : TieHandling::strict);
  expect_eq(outcome, "pte", expect.at("pte"), pte_expectation_view(game, solved));

  ujson maximins = ujson::array();
  ujson rounds = ujson::array();
  for (const EliminationRound& round : solved.trace.rounds) {
    maximins.push_back(ujson(payoffs_to_json(round.maximin)));
    auto eliminated = round.eliminated;
    std::sort(eliminated.begin(), eliminated.end());
    rounds.push_back(ujson(profiles_to_json(game, eliminated)));
  }
  expect_eq(outcome, "maximins", expect.at("maximins"), maximins);
  expect_eq(outcome, "elimination_rounds", expect.at("elimination_rounds"), rounds);

  if (expect.at("strict_rejects").get<bool>()) {
    try {
      pte_solve(game, TieHandling::strict);
      outcome.failures.push_back("strict_rejects: strict mode accepted a tied game");
    } catch (const GeneralPositionViolation&) {
    }
  }

  outcome.passed = outcome.failures.empty();
  return outcome;
}

inline ujson verdict_view(const TheoryVerdict& verdict) {
  ujson out;
  out["expected_one"] = verdict.expected_one.str();
  out["expected_two"] = verdict.expected_two.str();
  if (verdict.recommendation) out["recommendation"] = to_string(*verdict.recommendation);
  return out;
}

inline CorpusOutcome run_newcomb_entry(const ujson& entry) {
  CorpusOutcome outcome;
  outcome.name = entry.at("name").get<std::string>();
  const ujson& problem_spec = entry.at("problem");
  NewcombProblem problem;
  problem.payoff_one_full = Rational::parse(problem_spec.at("one_full").get<std::string>());
  problem.payoff_one_empty = Rational::parse(problem_spec.at("one_empty").get<std::string>());
  problem.payoff_two_full = Rational::parse(problem_spec.at("two_full").get<std::string>());
  problem.payoff_two_empty = Rational::parse(problem_spec.at("two_empty").get<std::string>());

  const ujson& expect = entry.at("expect");
  for (const auto& [key, theory] : {std::pair<const char*, DecisionTheory>{"cdt", DecisionTheory::cdt},
                                    {"edt", DecisionTheory::edt},
                                    {"nndt", DecisionTheory::nndt}}) {
    const ujson& spec = expect.at(key);
    NewcombProblem variant = problem;
    const Rational parameter = Rational::parse(spec.at("parameter").get<std::string>());
    if (theory == DecisionTheory::cdt)
      variant.prior_full = parameter;
    else
      variant.accuracy = parameter;
    ujson actual = verdict_view(expected_utilities(variant, theory));
    actual["parameter"] = parameter.str();
    expect_eq(outcome, key, spec, actual);
  }

  const Rational gap = Rational::parse(expect.at("cdt_gap").get<std::string>());
  for (const auto& prior_text : expect.at("cdt_gap_priors")) {
    NewcombProblem variant = problem;
    variant.prior_full = Rational::parse(prior_text.get<std::string>());
    const TheoryVerdict verdict = expected_utilities(variant, DecisionTheory::cdt);
    if (verdict.expected_two - verdict.expected_one != gap)
      outcome.failures.push_back("cdt_gap at prior " + prior_text.get<std::string>());
  }

  outcome.passed = outcome.failures.empty();
  return outcome;
}

}  // namespace detail

inline CorpusOutcome run_corpus_entry(const std::filesystem::path& dir, const ujson& entry) {
  const std::string kind = entry.at("kind").get<std::string>();
  if (kind == "game") return detail::run_game_entry(dir, entry);
  if (kind == "newcomb") return detail::run_newcomb_entry(entry);
  CorpusOutcome outcome;
  outcome.name = entry.value("name", "<unnamed>");
  outcome.failures.push_back("unknown corpus entry kind '" + kind + "'");
  return outcome;
}

/// Solves every corpus entry and compares against its expectation record.
inline std::vector<CorpusOutcome> run_corpus(const std::filesystem::path& dir) {
  std::ifstream in(dir / "expectations.jsonl");
  if (!in) throw std::runtime_error("run_corpus: cannot open " + (dir / "expectations.jsonl").string());
  std::vector<CorpusOutcome> outcomes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    outcomes.push_back(run_corpus_entry(dir, ujson::parse(line)));
  }
  return outcomes;
}

}  // namespace pte
