#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pte/equilibria.hpp"
#include "pte/errors.hpp"
#include "pte/game.hpp"
#include "pte/survivor_set.hpp"

namespace pte {

/// One round of preemption: the set it started from, the restricted maximin
/// tuple it compared against, and the profiles it removed.
struct EliminationRound {
  SurvivorSet before;
  MaximinVector maximin;
  std::vector<std::size_t> eliminated;
};

/// Full record of the iterated elimination. When a nonempty fixpoint is
/// reached the last round eliminates nothing; when the survivor set empties
/// out the last round is the one that removed the final profiles.
struct EliminationTrace {
  std::vector<EliminationRound> rounds;
};

enum class TieHandling {
  strict,   // refuse games that are not in general position
  lenient,  // allow ties; the fixpoint may then hold several profiles
};

enum class PteOutcome { unique, no_equilibrium, ambiguous };

struct PteResult {
  PteOutcome outcome = PteOutcome::no_equilibrium;
  std::optional<StrategyProfile> equilibrium;  // engaged iff outcome == unique
  std::vector<std::size_t> fixpoint;           // surviving profile indices
  EliminationTrace trace;

  bool exists() const { return outcome == PteOutcome::unique; }
};

/// Removes every surviving profile whose payoff vector does not weakly
/// dominate the maximin tuple restricted to the current survivors.
inline SurvivorSet elimination_round(const Game& game, const SurvivorSet& survivors) {
  const MaximinVector threshold = restricted_maximin(game, survivors);
  SurvivorSet next = survivors;
  survivors.for_each([&](std::size_t p) {
    if (!dominates(game.payoff_vector(p), threshold, Dominance::weak)) next.erase(p);
  });
  return next;
}

/// Iterates elimination_round from the full profile set to its fixpoint.
inline PteResult pte_solve(const Game& game, TieHandling mode = TieHandling::strict) {
  if (mode == TieHandling::strict) {
    if (const auto tie = find_payoff_tie(game)) {
      throw GeneralPositionViolation(
          "pte_solve: game is not in general position (player " + std::to_string(tie->player) +
          " is indifferent between " + game.profile_name(game.profile_at(tie->profile_a)) + " and " +
          game.profile_name(game.profile_at(tie->profile_b)) + "); use lenient mode for tied games");
    }
  }

  PteResult result;
  SurvivorSet current = SurvivorSet::all(game.profile_count());
  while (true) {
    EliminationRound round;
    round.before = current;
    round.maximin = restricted_maximin(game, current);
    SurvivorSet next = current;
    current.for_each([&](std::size_t p) {
      if (!dominates(game.payoff_vector(p), round.maximin, Dominance::weak)) {
        next.erase(p);
        round.eliminated.push_back(p);
      }
    });
    const bool fixpoint = round.eliminated.empty();
    result.trace.rounds.push_back(std::move(round));
    current = std::move(next);
    if (fixpoint || current.empty()) break;
  }

  result.fixpoint = current.indices();
  if (result.fixpoint.empty()) {
    result.outcome = PteOutcome::no_equilibrium;
  } else if (result.fixpoint.size() == 1) {
    result.outcome = PteOutcome::unique;
    result.equilibrium = game.profile_at(result.fixpoint.front());
  } else {
    // The fixpoint of a game in general position is at most a singleton.
    if (mode == TieHandling::strict)
      throw std::logic_error("pte_solve: multi-profile fixpoint on a game in general position");
    result.outcome = PteOutcome::ambiguous;
  }
  return result;
}

}  // namespace pte
