#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pte/elimination.hpp"
#include "pte/equilibria.hpp"
#include "pte/game.hpp"
#include "pte/minimax.hpp"
#include "pte/sampler.hpp"
#include "pte/survivor_set.hpp"

namespace pte {

/// Everything the solvers have to say about one game. Solver preconditions
/// surface as absent optionals, not failures.
struct GameReport {
  bool general_position = false;
  std::optional<PayoffTie> tie;   // engaged iff !general_position
  bool symmetry_checked = false;  // false when the player count exceeds the bound
  bool symmetric = false;

  std::vector<std::size_t> nash;
  std::vector<std::size_t> individually_rational;
  std::vector<std::size_t> translucent;
  std::vector<std::size_t> pareto_optimal;
  ActiveStrategySets minimax_active;
  PteResult pte;
  std::optional<StrategyProfile> hofstadter;      // symmetric games without diagonal ties
  std::optional<std::string> hofstadter_refusal;  // why it is absent, when applicable
  bool social_dilemma = false;
  std::vector<std::string> violations;  // inclusion-theorem breaches; empty on a correct build
};

/// Exactly one pure Nash equilibrium, and exactly one profile strictly
/// Pareto-improving on it.
inline bool is_social_dilemma(const Game& game) {
  const std::vector<std::size_t> nash = nash_pure_set(game);
  if (nash.size() != 1) return false;
  const PayoffVector at_nash = game.payoff_vector(nash.front());
  std::size_t improvements = 0;
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    if (p == nash.front()) continue;
    if (dominates(game.payoff_vector(p), at_nash, Dominance::strict)) ++improvements;
  }
  return improvements == 1;
}

namespace detail {

inline bool set_contains(const std::vector<std::size_t>& sorted, std::size_t value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

/// The inclusion theorems, checked against an already-computed report.
inline std::vector<std::string> check_inclusions(const Game& game, const GameReport& report) {
  std::vector<std::string> violations;

  if (report.general_position && report.pte.fixpoint.size() > 1)
    violations.push_back("elimination fixpoint holds several profiles on a game in general position");

  if (report.pte.exists()) {
    const std::size_t eq = game.profile_index(*report.pte.equilibrium);
    if (!set_contains(report.pareto_optimal, eq))
      violations.push_back("equilibrium of the iterated elimination is not Pareto-optimal");
    if (!set_contains(report.individually_rational, eq))
      violations.push_back("equilibrium of the iterated elimination is not individually rational");
  }

  for (const std::size_t p : report.nash)
    if (!set_contains(report.individually_rational, p))
      violations.push_back("Nash profile " + game.profile_name(game.profile_at(p)) +
                           " is not individually rational");

  for (const std::size_t p : report.individually_rational)
    if (!set_contains(report.translucent, p))
      violations.push_back("individually rational profile " + game.profile_name(game.profile_at(p)) +
                           " is not translucent");

  if (report.symmetric && report.hofstadter) {
    const std::size_t h = game.profile_index(*report.hofstadter);
    if (report.pte.exists() && *report.pte.equilibrium != *report.hofstadter)
      violations.push_back("on a symmetric game the elimination equilibrium differs from the diagonal optimum");
    if (!set_contains(report.individually_rational, h))
      violations.push_back("diagonal optimum of a symmetric game is not individually rational");
    if (!report.minimax_active.contains(*report.hofstadter))
      violations.push_back("diagonal optimum of a symmetric game is not minimax-rationalizable");
  }

  return violations;
}

}  // namespace detail

/// Runs every solver on the game and cross-checks the inclusion theorems.
inline GameReport classify(const Game& game) {
  GameReport report;
  report.tie = find_payoff_tie(game);
  report.general_position = !report.tie.has_value();
  try {
    report.symmetric = is_symmetric(game);
    report.symmetry_checked = true;
  } catch (const UnsupportedPlayerCount&) {
    report.symmetry_checked = false;
  }

  report.nash = nash_pure_set(game);
  report.individually_rational = individually_rational_set(game).indices();
  report.translucent = translucent_set(game).indices();
  report.pareto_optimal = pareto_optimal_set(game);
  report.minimax_active = minimax_rationalizable(game);
  // Lenient even for games in general position: should the at-most-one
  // fixpoint guarantee ever break, it must show up as a recorded violation,
  // not as a failure of the classification itself.
  report.pte = pte_solve(game, TieHandling::lenient);

  if (report.symmetry_checked && report.symmetric) {
    try {
      report.hofstadter = hofstadter_equilibrium(game);
    } catch (const DiagonalTiesError& e) {
      report.hofstadter_refusal = e.what();
    }
  } else if (report.symmetry_checked) {
    report.hofstadter_refusal = "game is not symmetric";
  }

  report.social_dilemma = is_social_dilemma(game);
  report.violations = detail::check_inclusions(game, report);
  return report;
}

/// The inclusion checks on their own; empty result means every theorem held.
inline std::vector<std::string> verify_inclusions(const Game& game) { return classify(game).violations; }

struct ScanStats {
  std::uint64_t games = 0;
  std::uint64_t with_pte = 0;
  std::uint64_t pte_not_minimax_rationalizable = 0;
  std::uint64_t pte_is_nash = 0;
  std::uint64_t pte_strictly_improves_some_nash = 0;
  std::uint64_t social_dilemmas = 0;
  std::uint64_t violations = 0;

  ScanStats& operator+=(const ScanStats& o) {
    games += o.games;
    with_pte += o.with_pte;
    pte_not_minimax_rationalizable += o.pte_not_minimax_rationalizable;
    pte_is_nash += o.pte_is_nash;
    pte_strictly_improves_some_nash += o.pte_strictly_improves_some_nash;
    social_dilemmas += o.social_dilemmas;
    violations += o.violations;
    return *this;
  }
};

/// Replayable record of a game worth keeping: (seed, index) reconstruct it
/// exactly, the remaining fields are for human inspection.
struct ScanFinding {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::string kind;    // "pte_not_minimax_rationalizable" or "violation"
  std::string detail;  // e.g. the equilibrium profile or the violated claim
};

struct ScanResult {
  SampleConfig config;
  ScanStats stats;
  std::vector<ScanFinding> findings;  // sorted by game index
};

namespace detail {

inline void scan_one(const SampleConfig& config, std::uint64_t index, ScanStats& stats,
                     std::vector<ScanFinding>& findings) {
  const Game game = sample_from_config(config, index);
  const GameReport report = classify(game);

  ++stats.games;
  if (report.social_dilemma) ++stats.social_dilemmas;
  if (report.pte.exists()) {
    ++stats.with_pte;
    const StrategyProfile& eq = *report.pte.equilibrium;
    const std::size_t eq_index = game.profile_index(eq);
    if (!report.minimax_active.contains(eq)) {
      ++stats.pte_not_minimax_rationalizable;
      findings.push_back(
          ScanFinding{config.seed, index, "pte_not_minimax_rationalizable", game.profile_name(eq)});
    }
    if (set_contains(report.nash, eq_index)) ++stats.pte_is_nash;
    const PayoffVector at_eq = game.payoff_vector(eq_index);
    for (const std::size_t nash : report.nash) {
      if (nash != eq_index && dominates(at_eq, game.payoff_vector(nash), Dominance::strict)) {
        ++stats.pte_strictly_improves_some_nash;
        break;
      }
    }
  }
  if (!report.violations.empty()) {
    ++stats.violations;
    for (const std::string& v : report.violations)
      findings.push_back(ScanFinding{config.seed, index, "violation", v});
  }
}

}  // namespace detail

/// Classifies `config.count` sampled games. Workers split the index range;
/// the aggregation is a commutative sum and findings are ordered by index, so
/// the result is identical for any worker count.
inline ScanResult scan(const SampleConfig& config, int workers = 1) {
  config.validate();
  if (workers < 1) workers = 1;
  const auto count = config.count;
  if (static_cast<std::uint64_t>(workers) > count && count > 0) workers = static_cast<int>(count);

  std::vector<ScanStats> stats(static_cast<std::size_t>(workers));
  std::vector<std::vector<ScanFinding>> findings(static_cast<std::size_t>(workers));

  const auto run = [&](int worker) {
    for (std::uint64_t index = static_cast<std::uint64_t>(worker); index < count;
         index += static_cast<std::uint64_t>(workers))
      detail::scan_one(config, index, stats[static_cast<std::size_t>(worker)],
                       findings[static_cast<std::size_t>(worker)]);
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }

  ScanResult result;
  result.config = config;
  for (int w = 0; w < workers; ++w) {
    result.stats += stats[static_cast<std::size_t>(w)];
    result.findings.insert(result.findings.end(), findings[static_cast<std::size_t>(w)].begin(),
                           findings[static_cast<std::size_t>(w)].end());
  }
  std::sort(result.findings.begin(), result.findings.end(), [](const ScanFinding& a, const ScanFinding& b) {
    return a.index != b.index ? a.index < b.index : a.kind < b.kind;
  });
  return result;
}

}  // namespace pte
