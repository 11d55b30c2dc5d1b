#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pte/errors.hpp"
#include "pte/rational.hpp"

namespace pte {

/// One strategy index per player.
struct StrategyProfile {
  std::vector<int> choices;

  StrategyProfile() = default;
  StrategyProfile(std::initializer_list<int> c) : choices(c) {}
  explicit StrategyProfile(std::vector<int> c) : choices(std::move(c)) {}

  int operator[](std::size_t player) const { return choices[player]; }
  std::size_t size() const { return choices.size(); }

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) { return a.choices == b.choices; }
  friend bool operator!=(const StrategyProfile& a, const StrategyProfile& b) { return !(a == b); }
  friend bool operator<(const StrategyProfile& a, const StrategyProfile& b) { return a.choices < b.choices; }
};

using PayoffVector = std::vector<Rational>;

enum class Dominance { weak, strict };

/// Weak: every component of a is >= the matching component of b.
/// Strict: weak, with at least one component strictly greater.
inline bool dominates(const PayoffVector& a, const PayoffVector& b, Dominance mode) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: payoff vectors of different lengths");
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (b[i] < a[i]) strictly = true;
  }
  return mode == Dominance::weak || strictly;
}

/// Finite normal-form game with exact rational payoffs. Payoffs are stored
/// densely over the lexicographic profile order in which player 0's strategy
/// index varies slowest; that order is also the file-format order.
class Game {
 public:
  /// `payoffs` holds profile_count * player_count rationals, profile-major:
  /// entry [p * n + i] is player i's payoff at the profile with index p.
  Game(std::vector<int> strategy_counts, std::vector<Rational> payoffs,
       std::vector<std::vector<std::string>> strategy_labels = {})
      : strategy_counts_(std::move(strategy_counts)),
        payoffs_(std::move(payoffs)),
        labels_(std::move(strategy_labels)) {
    if (strategy_counts_.empty()) throw std::invalid_argument("Game: needs at least one player");
    std::size_t profiles = 1;
    for (const int c : strategy_counts_) {
      if (c <= 0) throw std::invalid_argument("Game: strategy counts must be positive");
      profiles *= static_cast<std::size_t>(c);
    }
    profile_count_ = profiles;
    if (payoffs_.size() != profiles * strategy_counts_.size())
      throw std::invalid_argument("Game: payoff table does not cover every profile");
    if (!labels_.empty()) {
      if (labels_.size() != strategy_counts_.size())
        throw std::invalid_argument("Game: one label list per player expected");
      for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].size() != static_cast<std::size_t>(strategy_counts_[i]))
          throw std::invalid_argument("Game: one label per strategy expected");
    }
  }

  int player_count() const { return static_cast<int>(strategy_counts_.size()); }
  int strategy_count(int player) const { return strategy_counts_.at(static_cast<std::size_t>(player)); }
  const std::vector<int>& strategy_counts() const { return strategy_counts_; }
  std::size_t profile_count() const { return profile_count_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  std::string strategy_name(int player, int strategy) const {
    if (has_labels()) return labels_[static_cast<std::size_t>(player)][static_cast<std::size_t>(strategy)];
    return std::to_string(strategy);
  }

  std::size_t profile_index(const StrategyProfile& profile) const {
    if (profile.size() != strategy_counts_.size())
      throw std::out_of_range("profile_index: wrong number of choices");
    std::size_t index = 0;
    for (std::size_t i = 0; i < strategy_counts_.size(); ++i) {
      const int c = profile.choices[i];
      if (c < 0 || c >= strategy_counts_[i]) throw std::out_of_range("profile_index: strategy index out of range");
      index = index * static_cast<std::size_t>(strategy_counts_[i]) + static_cast<std::size_t>(c);
    }
    return index;
  }

  StrategyProfile profile_at(std::size_t index) const {
    if (index >= profile_count_) throw std::out_of_range("profile_at: index out of range");
    std::vector<int> choices(strategy_counts_.size());
    for (std::size_t i = strategy_counts_.size(); i-- > 0;) {
      const auto c = static_cast<std::size_t>(strategy_counts_[i]);
      choices[i] = static_cast<int>(index % c);
      index /= c;
    }
    return StrategyProfile(std::move(choices));
  }

  const Rational& payoff(std::size_t profile_index, int player) const {
    if (profile_index >= profile_count_ || player < 0 || player >= player_count())
      throw std::out_of_range("payoff: index out of range");
    return payoffs_[profile_index * strategy_counts_.size() + static_cast<std::size_t>(player)];
  }

  const Rational& payoff(const StrategyProfile& profile, int player) const {
    return payoff(profile_index(profile), player);
  }

  PayoffVector payoff_vector(std::size_t profile_index) const {
    if (profile_index >= profile_count_) throw std::out_of_range("payoff_vector: index out of range");
    const auto n = strategy_counts_.size();
    return PayoffVector(payoffs_.begin() + static_cast<std::ptrdiff_t>(profile_index * n),
                        payoffs_.begin() + static_cast<std::ptrdiff_t>((profile_index + 1) * n));
  }

  /// Human-oriented profile rendering, e.g. "(Defect,Cooperate)".
  std::string profile_name(const StrategyProfile& profile) const {
    std::string out = "(";
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (i > 0) out += ",";
      out += strategy_name(static_cast<int>(i), profile.choices[i]);
    }
    out += ")";
    return out;
  }

  friend bool operator==(const Game& a, const Game& b) {
    return a.strategy_counts_ == b.strategy_counts_ && a.payoffs_ == b.payoffs_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<int> strategy_counts_;
  std::vector<Rational> payoffs_;
  std::vector<std::vector<std::string>> labels_;
  std::size_t profile_count_ = 0;
};

/// Two profiles between whose payoffs some player is indifferent.
struct PayoffTie {
  int player = 0;
  std::size_t profile_a = 0;
  std::size_t profile_b = 0;
};

/// A game is in general position when every player strictly ranks all
/// strategy profiles. Returns one offending pair otherwise.
inline std::optional<PayoffTie> find_payoff_tie(const Game& game) {
  const std::size_t profiles = game.profile_count();
  for (int player = 0; player < game.player_count(); ++player) {
    // Sort profile indices by payoff; ties end up adjacent.
    std::vector<std::size_t> order(profiles);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return game.payoff(a, player) < game.payoff(b, player);
    });
    for (std::size_t k = 1; k < profiles; ++k) {
      if (game.payoff(order[k - 1], player) == game.payoff(order[k], player))
        return PayoffTie{player, order[k - 1], order[k]};
    }
  }
  return std::nullopt;
}

inline bool is_general_position(const Game& game) { return !find_payoff_tie(game).has_value(); }

namespace detail {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

inline constexpr int kMaxSymmetryPlayers = 8;

/// Invariance of the payoff structure under every permutation of players:
/// u_i(s) == u_{perm(i)}(s composed with perm) for all profiles and players.
inline bool is_symmetric(const Game& game) {
  const int n = game.player_count();
  if (n > kMaxSymmetryPlayers)
    throw UnsupportedPlayerCount("is_symmetric: player count exceeds supported bound " +
                                 std::to_string(kMaxSymmetryPlayers));
  for (int i = 1; i < n; ++i)
    if (game.strategy_count(i) != game.strategy_count(0)) return false;

  bool symmetric = true;
  detail::for_each_permutation(n, [&](const std::vector<int>& perm) {
    if (!symmetric) return;
    std::vector<int> permuted(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < game.profile_count() && symmetric; ++p) {
      const StrategyProfile profile = game.profile_at(p);
      for (int j = 0; j < n; ++j)
        permuted[static_cast<std::size_t>(j)] = profile.choices[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      const std::size_t q = game.profile_index(StrategyProfile(permuted));
      for (int i = 0; i < n; ++i) {
        if (game.payoff(p, i) != game.payoff(q, perm[static_cast<std::size_t>(i)])) {
          symmetric = false;
          break;
        }
      }
    }
  });
  return symmetric;
}

/// Profiles whose payoff vector no other profile strictly Pareto-dominates.
inline std::vector<std::size_t> pareto_optimal_set(const Game& game) {
  const std::size_t profiles = game.profile_count();
  std::vector<std::size_t> result;
  for (std::size_t p = 0; p < profiles; ++p) {
    const PayoffVector mine = game.payoff_vector(p);
    bool dominated = false;
    for (std::size_t q = 0; q < profiles && !dominated; ++q) {
      if (q == p) continue;
      dominated = dominates(game.payoff_vector(q), mine, Dominance::strict);
    }
    if (!dominated) result.push_back(p);
  }
  return result;
}

}  // namespace pte
