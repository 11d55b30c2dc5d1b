#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pte/game.hpp"

namespace pte {

/// Per-player sets of strategies that survive iterated minimax deletion.
struct ActiveStrategySets {
  std::vector<std::vector<bool>> active;

  static ActiveStrategySets full(const Game& game) {
    ActiveStrategySets s;
    s.active.reserve(static_cast<std::size_t>(game.player_count()));
    for (int i = 0; i < game.player_count(); ++i)
      s.active.emplace_back(static_cast<std::size_t>(game.strategy_count(i)), true);
    return s;
  }

  bool is_active(int player, int strategy) const {
    return active[static_cast<std::size_t>(player)][static_cast<std::size_t>(strategy)];
  }
  void deactivate(int player, int strategy) {
    active[static_cast<std::size_t>(player)][static_cast<std::size_t>(strategy)] = false;
  }

  std::vector<int> active_strategies(int player) const {
    std::vector<int> out;
    const auto& row = active[static_cast<std::size_t>(player)];
    for (std::size_t s = 0; s < row.size(); ++s)
      if (row[s]) out.push_back(static_cast<int>(s));
    return out;
  }

  bool contains(const StrategyProfile& profile) const {
    for (std::size_t i = 0; i < profile.size(); ++i)
      if (!active[i][static_cast<std::size_t>(profile.choices[i])]) return false;
    return true;
  }

  friend bool operator==(const ActiveStrategySets& a, const ActiveStrategySets& b) { return a.active == b.active; }
  friend bool operator!=(const ActiveStrategySets& a, const ActiveStrategySets& b) { return !(a == b); }
};

namespace detail {

/// Min and max of u_player over all combinations of the *other* players'
/// active strategies, with `player` pinned to `strategy`. The empty opponent
/// product (single-player games) contributes exactly one combination.
inline std::pair<Rational, Rational> active_min_max(const Game& game, const ActiveStrategySets& sets, int player,
                                                    int strategy) {
  const int n = game.player_count();
  std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    options[static_cast<std::size_t>(j)] =
        j == player ? std::vector<int>{strategy} : sets.active_strategies(j);
    if (options[static_cast<std::size_t>(j)].empty())
      throw std::logic_error("active_min_max: a player has no active strategies");
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<int> choices(static_cast<std::size_t>(n));
  bool first = true;
  Rational lo, hi;
  while (true) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) choices[j] = options[j][pick[j]];
    const Rational& u = game.payoff(StrategyProfile(choices), player);
    if (first || u < lo) lo = u;
    if (first || hi < u) hi = u;
    first = false;

    std::size_t j = static_cast<std::size_t>(n);
    while (j-- > 0) {
      if (++pick[j] < options[j].size()) break;
      pick[j] = 0;
      if (j == 0) return {lo, hi};
    }
  }
}

}  // namespace detail

/// A strategy is minimax-dominated when some other active strategy's worst
/// payoff beats its best payoff over the active opponent combinations.
/// Returns the lowest-indexed dominating strategy, if any.
inline std::optional<int> minimax_dominated(const Game& game, const ActiveStrategySets& sets, int player,
                                            int strategy) {
  if (!sets.is_active(player, strategy))
    throw std::invalid_argument("minimax_dominated: strategy is not active");
  const Rational best = detail::active_min_max(game, sets, player, strategy).second;
  for (const int candidate : sets.active_strategies(player)) {
    if (candidate == strategy) continue;
    const Rational worst = detail::active_min_max(game, sets, player, candidate).first;
    if (best < worst) return candidate;
  }
  return std::nullopt;
}

/// Iterated deletion of minimax-dominated strategies, removing every
/// currently dominated strategy of every player per sweep, to the fixpoint.
/// The fixpoint is independent of the deletion order.
inline ActiveStrategySets minimax_rationalizable(const Game& game) {
  ActiveStrategySets sets = ActiveStrategySets::full(game);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> doomed;
    for (int i = 0; i < game.player_count(); ++i)
      for (const int s : sets.active_strategies(i))
        if (minimax_dominated(game, sets, i, s)) doomed.emplace_back(i, s);
    for (const auto& [player, strategy] : doomed) {
      sets.deactivate(player, strategy);
      changed = true;
    }
  }
  return sets;
}

/// A profile is minimax-rationalizable iff each of its strategies survives.
inline bool profile_minimax_rationalizable(const ActiveStrategySets& sets, const StrategyProfile& profile) {
  return sets.contains(profile);
}

}  // namespace pte
