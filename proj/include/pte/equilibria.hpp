#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "pte/errors.hpp"
#include "pte/game.hpp"
#include "pte/survivor_set.hpp"

namespace pte {

/// One "best guaranteed payoff" per player.
using MaximinVector = std::vector<Rational>;

namespace detail {

/// stride[i] such that the strategy of player i at profile index p is
/// (p / stride[i]) % strategy_count(i). Player 0 varies slowest.
inline std::vector<std::size_t> profile_strides(const Game& game) {
  const auto n = static_cast<std::size_t>(game.player_count());
  std::vector<std::size_t> stride(n);
  stride[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;)
    stride[i] = stride[i + 1] * static_cast<std::size_t>(game.strategy_count(static_cast<int>(i + 1)));
  return stride;
}

/// Per-player, per-own-strategy minimum of the player's payoff over the given
/// profiles. Strategies not hit by any profile are left disengaged.
struct StrategyMinima {
  // minima[player][strategy], valid only where seen[player][strategy].
  std::vector<std::vector<Rational>> minima;
  std::vector<std::vector<bool>> seen;
};

inline StrategyMinima strategy_minima(const Game& game, const SurvivorSet& survivors) {
  const int n = game.player_count();
  StrategyMinima out;
  out.minima.resize(static_cast<std::size_t>(n));
  out.seen.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.minima[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(game.strategy_count(i)));
    out.seen[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(game.strategy_count(i)), false);
  }
  const std::vector<std::size_t> stride = profile_strides(game);
  survivors.for_each([&](std::size_t p) {
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto s = (p / stride[ui]) % static_cast<std::size_t>(game.strategy_count(i));
      const Rational& u = game.payoff(p, i);
      if (!out.seen[ui][s] || u < out.minima[ui][s]) {
        out.minima[ui][s] = u;
        out.seen[ui][s] = true;
      }
    }
  });
  return out;
}

}  // namespace detail

/// For every player, the maximum over own strategies (restricted to those
/// with at least one surviving profile) of the minimum payoff over the
/// surviving profiles that use the strategy.
inline MaximinVector restricted_maximin(const Game& game, const SurvivorSet& survivors) {
  if (survivors.empty()) throw EmptySurvivorSetError("restricted_maximin: empty survivor set");
  const detail::StrategyMinima mins = detail::strategy_minima(game, survivors);
  MaximinVector result(static_cast<std::size_t>(game.player_count()));
  for (int i = 0; i < game.player_count(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    bool found = false;
    for (int s = 0; s < game.strategy_count(i); ++s) {
      const auto us = static_cast<std::size_t>(s);
      if (!mins.seen[ui][us]) continue;
      if (!found || result[ui] < mins.minima[ui][us]) {
        result[ui] = mins.minima[ui][us];
        found = true;
      }
    }
    // A nonempty survivor set touches at least one strategy of every player.
  }
  return result;
}

inline MaximinVector maximin(const Game& game) {
  return restricted_maximin(game, SurvivorSet::all(game.profile_count()));
}

/// Profiles whose payoff vector weakly dominates the maximin tuple.
inline SurvivorSet individually_rational_set(const Game& game) {
  const MaximinVector threshold = maximin(game);
  SurvivorSet result = SurvivorSet::none(game.profile_count());
  for (std::size_t p = 0; p < game.profile_count(); ++p)
    if (dominates(game.payoff_vector(p), threshold, Dominance::weak)) result.insert(p);
  return result;
}

/// Pure-strategy Nash equilibria: no player gains by a unilateral deviation
/// (weak best response).
inline std::vector<std::size_t> nash_pure_set(const Game& game) {
  const std::vector<std::size_t> stride = detail::profile_strides(game);
  std::vector<std::size_t> result;
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    bool equilibrium = true;
    for (int i = 0; i < game.player_count() && equilibrium; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto count = static_cast<std::size_t>(game.strategy_count(i));
      const std::size_t mine = (p / stride[ui]) % count;
      const std::size_t base = p - mine * stride[ui];  // player i's strategy zeroed out
      const Rational& u = game.payoff(p, i);
      for (std::size_t alt = 0; alt < count; ++alt) {
        if (alt == mine) continue;
        const std::size_t q = base + alt * stride[ui];
        if (u < game.payoff(q, i)) {
          equilibrium = false;
          break;
        }
      }
    }
    if (equilibrium) result.push_back(p);
  }
  return result;
}

/// The diagonal profile of a symmetric game with the highest common payoff.
inline StrategyProfile hofstadter_equilibrium(const Game& game) {
  if (!is_symmetric(game)) throw NotSymmetricError("hofstadter_equilibrium: game is not symmetric");
  const int m = game.strategy_count(0);
  const auto n = static_cast<std::size_t>(game.player_count());
  std::optional<int> best;
  Rational best_payoff;
  std::vector<Rational> diagonal;
  diagonal.reserve(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    const StrategyProfile profile(std::vector<int>(n, v));
    const Rational u = game.payoff(profile, 0);
    for (const Rational& previous : diagonal)
      if (previous == u) throw DiagonalTiesError("hofstadter_equilibrium: tied diagonal payoffs");
    diagonal.push_back(u);
    if (!best || best_payoff < u) {
      best = v;
      best_payoff = u;
    }
  }
  return StrategyProfile(std::vector<int>(n, *best));
}

/// Single-round elimination against each player's second-lowest per-strategy
/// worst payoff (the lone worst payoff for a single-strategy player).
inline SurvivorSet translucent_set(const Game& game) {
  const detail::StrategyMinima mins = detail::strategy_minima(game, SurvivorSet::all(game.profile_count()));
  MaximinVector threshold(static_cast<std::size_t>(game.player_count()));
  for (int i = 0; i < game.player_count(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    std::vector<Rational> worst = mins.minima[ui];  // full set: every strategy is seen
    std::sort(worst.begin(), worst.end());
    threshold[ui] = worst.size() >= 2 ? worst[1] : worst[0];
  }
  SurvivorSet result = SurvivorSet::none(game.profile_count());
  for (std::size_t p = 0; p < game.profile_count(); ++p)
    if (dominates(game.payoff_vector(p), threshold, Dominance::weak)) result.insert(p);
  return result;
}

}  // namespace pte
