#pragma once

// Brute-force reference solvers used to cross-check the library. Everything
// here is written directly from the definitions with plain nested loops over
// profiles, independent of the library's incremental machinery.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "pte/game.hpp"
#include "pte/sampler.hpp"

namespace oracles {

// All profiles of the game, by index.
inline std::vector<pte::StrategyProfile> all_profiles(const pte::Game& game) {
  std::vector<pte::StrategyProfile> out;
  for (std::size_t p = 0; p < game.profile_count(); ++p) out.push_back(game.profile_at(p));
  return out;
}

// Worst payoff of `player` when holding `strategy`, over the given profiles.
inline std::optional<pte::Rational> worst_with_strategy(const pte::Game& game,
                                                        const std::vector<std::size_t>& profiles, int player,
                                                        int strategy) {
  std::optional<pte::Rational> worst;
  for (const std::size_t p : profiles) {
    if (game.profile_at(p).choices[static_cast<std::size_t>(player)] != strategy) continue;
    const pte::Rational& u = game.payoff(p, player);
    if (!worst || u < *worst) worst = u;
  }
  return worst;
}

inline std::vector<pte::Rational> maximin_over(const pte::Game& game, const std::vector<std::size_t>& profiles) {
  std::vector<pte::Rational> result;
  for (int i = 0; i < game.player_count(); ++i) {
    std::optional<pte::Rational> best;
    for (int s = 0; s < game.strategy_count(i); ++s) {
      const auto worst = worst_with_strategy(game, profiles, i, s);
      if (worst && (!best || *best < *worst)) best = *worst;
    }
    result.push_back(*best);
  }
  return result;
}

inline std::vector<std::size_t> full_index_set(const pte::Game& game) {
  std::vector<std::size_t> all(game.profile_count());
  for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
  return all;
}

inline std::vector<pte::Rational> maximin(const pte::Game& game) {
  return maximin_over(game, full_index_set(game));
}

inline bool weakly_dominates(const pte::Game& game, std::size_t profile, const std::vector<pte::Rational>& floor) {
  for (int i = 0; i < game.player_count(); ++i)
    if (game.payoff(profile, i) < floor[static_cast<std::size_t>(i)]) return false;
  return true;
}

inline std::vector<std::size_t> individually_rational(const pte::Game& game) {
  const std::vector<pte::Rational> floor = maximin(game);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < game.profile_count(); ++p)
    if (weakly_dominates(game, p, floor)) out.push_back(p);
  return out;
}

inline std::vector<std::size_t> nash(const pte::Game& game) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    const pte::StrategyProfile profile = game.profile_at(p);
    bool stable = true;
    for (int i = 0; i < game.player_count() && stable; ++i) {
      for (int alt = 0; alt < game.strategy_count(i); ++alt) {
        pte::StrategyProfile deviated = profile;
        deviated.choices[static_cast<std::size_t>(i)] = alt;
        if (game.payoff(p, i) < game.payoff(deviated, i)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(p);
  }
  return out;
}

inline std::vector<std::size_t> pareto_optimal(const pte::Game& game) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    bool dominated = false;
    for (std::size_t q = 0; q < game.profile_count() && !dominated; ++q) {
      if (q == p) continue;
      bool all_ge = true;
      bool some_gt = false;
      for (int i = 0; i < game.player_count(); ++i) {
        if (game.payoff(q, i) < game.payoff(p, i)) all_ge = false;
        if (game.payoff(p, i) < game.payoff(q, i)) some_gt = true;
      }
      dominated = all_ge && some_gt;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

inline std::vector<std::size_t> translucent(const pte::Game& game) {
  std::vector<pte::Rational> thresholds;
  const std::vector<std::size_t> all = full_index_set(game);
  for (int i = 0; i < game.player_count(); ++i) {
    std::vector<pte::Rational> worsts;
    for (int s = 0; s < game.strategy_count(i); ++s) worsts.push_back(*worst_with_strategy(game, all, i, s));
    std::sort(worsts.begin(), worsts.end());
    thresholds.push_back(worsts.size() >= 2 ? worsts[1] : worsts[0]);
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < game.profile_count(); ++p)
    if (weakly_dominates(game, p, thresholds)) out.push_back(p);
  return out;
}

// Iterated elimination of profiles below the restricted maximin, as a plain
// loop over index vectors; returns the fixpoint.
inline std::vector<std::size_t> elimination_fixpoint(const pte::Game& game) {
  std::vector<std::size_t> survivors = full_index_set(game);
  while (!survivors.empty()) {
    const std::vector<pte::Rational> floor = maximin_over(game, survivors);
    std::vector<std::size_t> next;
    for (const std::size_t p : survivors)
      if (weakly_dominates(game, p, floor)) next.push_back(p);
    if (next == survivors) break;
    survivors = next;
  }
  return survivors;
}

// Random game with small payoffs drawn with replacement, so ties are common.
// Used to exercise lenient-mode behavior.
inline pte::Game random_tied_game(const std::vector<int>& shape, std::uint64_t seed, std::uint64_t index) {
  pte::SplitMix64 rng(pte::detail::stream_key(seed, index, 17));
  std::size_t profiles = 1;
  for (const int c : shape) profiles *= static_cast<std::size_t>(c);
  std::vector<pte::Rational> payoffs;
  payoffs.reserve(profiles * shape.size());
  for (std::size_t k = 0; k < profiles * shape.size(); ++k)
    payoffs.emplace_back(static_cast<std::int64_t>(rng.below(5)));
  return pte::Game(shape, std::move(payoffs));
}

}  // namespace oracles
