#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pte/equilibria.hpp"
#include "pte/sampler.hpp"

using namespace pte;
using fixtures::profile_by_labels;

namespace {

std::vector<std::size_t> indices_of(const Game& game, const std::vector<std::vector<std::string>>& named) {
  std::vector<std::size_t> out;
  for (const auto& names : named) out.push_back(game.profile_index(profile_by_labels(game, names)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("restricted maximin over the full set and over survivor subsets") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(maximin(pd) == MaximinVector{Rational(1), Rational(1)});

  const SurvivorSet diagonal = SurvivorSet::of(
      pd.profile_count(), indices_of(pd, {{"Defect", "Defect"}, {"Cooperate", "Cooperate"}}));
  CHECK(restricted_maximin(pd, diagonal) == MaximinVector{Rational(2), Rational(2)});

  const Game asym = fixtures::asymmetric_2x2();
  const SurvivorSet column_d = SurvivorSet::of(asym.profile_count(), indices_of(asym, {{"A", "D"}, {"B", "D"}}));
  CHECK(restricted_maximin(asym, column_d) == MaximinVector{Rational(2), Rational(1)});

  const Game dilemma = fixtures::asymmetric_social_dilemma();
  CHECK(maximin(dilemma) == MaximinVector{Rational(5), Rational(3)});

  CHECK_THROWS_AS(restricted_maximin(pd, SurvivorSet::none(pd.profile_count())), EmptySurvivorSetError);
}

TEST_CASE("maximin components always occur as payoffs of surviving profiles") {
  for (std::uint64_t index = 0; index < 30; ++index) {
    const Game game = sample_game({3, 3}, 11, index);
    const MaximinVector floor = maximin(game);
    for (int i = 0; i < game.player_count(); ++i) {
      bool found = false;
      for (std::size_t p = 0; p < game.profile_count(); ++p)
        if (game.payoff(p, i) == floor[static_cast<std::size_t>(i)]) found = true;
      CHECK(found);
    }
    CHECK(floor == oracles::maximin(game));
  }
}

TEST_CASE("individually rational sets match the stated examples") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(individually_rational_set(pd).indices() ==
        indices_of(pd, {{"Defect", "Defect"}, {"Cooperate", "Cooperate"}}));

  const Game dilemma = fixtures::asymmetric_social_dilemma();
  CHECK(individually_rational_set(dilemma).indices() ==
        indices_of(dilemma, {{"D", "A"}, {"F", "B"}, {"F", "C"}}));

  const Game chicken = fixtures::chicken();
  CHECK(chicken.profile_index(profile_by_labels(chicken, {"Straight", "Straight"})) == 0);
  CHECK(individually_rational_set(chicken).indices() == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("pure Nash equilibria under weak best response") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(nash_pure_set(pd) == indices_of(pd, {{"Defect", "Defect"}}));

  const Game dilemma = fixtures::asymmetric_social_dilemma();
  CHECK(nash_pure_set(dilemma) == indices_of(dilemma, {{"F", "C"}}));

  const Game coordination = fixtures::coordination();
  CHECK(nash_pure_set(coordination) ==
        indices_of(coordination, {{"Sushi", "Sushi"}, {"Pizza", "Pizza"}}));

  const Game chicken = fixtures::chicken();
  CHECK(nash_pure_set(chicken) ==
        indices_of(chicken, {{"Straight", "Swerve"}, {"Swerve", "Straight"}}));
}

TEST_CASE("hofstadter equilibrium maximizes the diagonal of a symmetric game") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(hofstadter_equilibrium(pd) == profile_by_labels(pd, {"Cooperate", "Cooperate"}));

  const Game chicken = fixtures::chicken();
  CHECK(hofstadter_equilibrium(chicken) == profile_by_labels(chicken, {"Swerve", "Swerve"}));

  const Game big = fixtures::symmetric_3x3();
  CHECK(hofstadter_equilibrium(big) == profile_by_labels(big, {"A", "A"}));
  CHECK(big.payoff(hofstadter_equilibrium(big), 0) == Rational(9));

  // Off-diagonal ties do not matter, diagonal ties are refused.
  const Game coordination = fixtures::coordination();
  CHECK(hofstadter_equilibrium(coordination) == profile_by_labels(coordination, {"Pizza", "Pizza"}));
  CHECK_THROWS_AS(hofstadter_equilibrium(fixtures::asymmetric_2x2()), NotSymmetricError);
  const Game tied_diagonal = fixtures::make_game({2, 2}, {"1", "1", "0", "2", "2", "0", "1", "1"});
  CHECK(is_symmetric(tied_diagonal));
  CHECK_THROWS_AS(hofstadter_equilibrium(tied_diagonal), DiagonalTiesError);
}

TEST_CASE("translucent sets use each player's second-lowest strategy floor") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(translucent_set(pd).indices() ==
        indices_of(pd, {{"Defect", "Defect"}, {"Cooperate", "Cooperate"}}));

  const Game chicken = fixtures::chicken();
  CHECK(translucent_set(chicken).indices() == std::vector<std::size_t>{1, 2, 3});

  const Game ccbr = fixtures::pte_not_minimax_3x3();
  CHECK(translucent_set(ccbr).indices() ==
        indices_of(ccbr, {{"B", "D"}, {"B", "E"}, {"B", "F"}, {"C", "D"}, {"C", "E"}, {"C", "F"}}));
}

TEST_CASE("solver outputs agree with the brute-force oracles on sampled games") {
  for (std::uint64_t index = 0; index < 40; ++index) {
    const Game game = index % 2 == 0 ? sample_game({3, 3}, 5, index) : oracles::random_tied_game({3, 3}, 5, index);
    CHECK(individually_rational_set(game).indices() == oracles::individually_rational(game));
    CHECK(nash_pure_set(game) == oracles::nash(game));
    CHECK(translucent_set(game).indices() == oracles::translucent(game));
  }
  // A three-player shape exercises the generic profile iteration.
  for (std::uint64_t index = 0; index < 10; ++index) {
    const Game game = sample_game({2, 3, 2}, 6, index);
    CHECK(individually_rational_set(game).indices() == oracles::individually_rational(game));
    CHECK(nash_pure_set(game) == oracles::nash(game));
    CHECK(translucent_set(game).indices() == oracles::translucent(game));
    CHECK(maximin(game) == oracles::maximin(game));
  }
}

TEST_CASE("inclusion chain nash within IR within translucent") {
  for (std::uint64_t index = 0; index < 40; ++index) {
    const Game game = index % 2 == 0 ? sample_game({3, 3}, 7, index) : oracles::random_tied_game({2, 3}, 7, index);
    const auto nash = nash_pure_set(game);
    const auto ir = individually_rational_set(game);
    const auto te = translucent_set(game);
    for (const std::size_t p : nash) CHECK(ir.contains(p));
    ir.for_each([&](std::size_t p) { CHECK(te.contains(p)); });
  }
}

TEST_CASE("on two-strategy players the translucent floor equals the maximin") {
  for (std::uint64_t index = 0; index < 30; ++index) {
    const Game game = sample_game({2, 2}, 8, index);
    CHECK(translucent_set(game) == individually_rational_set(game));
  }
}

TEST_CASE("single-strategy and single-player edge cases") {
  const Game tiny = fixtures::single_profile_game();
  CHECK(maximin(tiny) == MaximinVector{Rational(7)});
  CHECK(individually_rational_set(tiny).indices() == std::vector<std::size_t>{0});
  CHECK(translucent_set(tiny).indices() == std::vector<std::size_t>{0});
  CHECK(nash_pure_set(tiny) == std::vector<std::size_t>{0});
  CHECK(hofstadter_equilibrium(tiny) == StrategyProfile{0});

  // One player, three strategies: the translucent floor is the second-lowest
  // payoff while individual rationality keeps only the best.
  const Game solo = fixtures::make_game({3}, {"1", "3", "2"});
  CHECK(individually_rational_set(solo).indices() == std::vector<std::size_t>{1});
  CHECK(translucent_set(solo).indices() == std::vector<std::size_t>{1, 2});
}
