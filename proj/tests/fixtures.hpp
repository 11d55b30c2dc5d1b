#pragma once

// The named example games used across the test suites. Payoffs are written as
// strings in file-format order (player 0's strategy varying slowest) so the
// fixtures read like the corpus files.

#include <string>
#include <vector>

#include "pte/game.hpp"

namespace fixtures {

inline pte::Game make_game(std::vector<int> shape, const std::vector<std::string>& payoffs,
                           std::vector<std::vector<std::string>> labels = {}) {
  std::vector<pte::Rational> values;
  values.reserve(payoffs.size());
  for (const std::string& p : payoffs) values.push_back(pte::Rational::parse(p));
  return pte::Game(std::move(shape), std::move(values), std::move(labels));
}

inline pte::StrategyProfile profile_by_labels(const pte::Game& game, const std::vector<std::string>& names) {
  std::vector<int> choices;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int found = -1;
    for (int s = 0; s < game.strategy_count(static_cast<int>(i)); ++s)
      if (game.strategy_name(static_cast<int>(i), s) == names[i]) found = s;
    if (found < 0) throw std::invalid_argument("profile_by_labels: no strategy named " + names[i]);
    choices.push_back(found);
  }
  return pte::StrategyProfile(std::move(choices));
}

inline pte::Game prisoners_dilemma() {
  return make_game({2, 2},
                   {"1", "1",   // Defect Defect
                    "3", "0",   // Defect Cooperate
                    "0", "3",   // Cooperate Defect
                    "2", "2"},  // Cooperate Cooperate
                   {{"Defect", "Cooperate"}, {"Defect", "Cooperate"}});
}

inline pte::Game chicken() {
  return make_game({2, 2},
                   {"0", "0",   // Straight Straight
                    "3", "1",   // Straight Swerve
                    "1", "3",   // Swerve Straight
                    "2", "2"},  // Swerve Swerve
                   {{"Straight", "Swerve"}, {"Straight", "Swerve"}});
}

inline pte::Game coordination() {
  return make_game({2, 2},
                   {"1", "1",   // Sushi Sushi
                    "0", "0",   // Sushi Pizza
                    "0", "0",   // Pizza Sushi
                    "2", "2"},  // Pizza Pizza
                   {{"Sushi", "Pizza"}, {"Sushi", "Pizza"}});
}

// 2x2 asymmetric game whose second elimination round uses a maximin tuple
// that mixes both players' restricted guarantees.
inline pte::Game asymmetric_2x2() {
  return make_game({2, 2},
                   {"0", "2",   // A C
                    "2", "3",   // A D
                    "3", "0",   // B C
                    "1", "1"},  // B D
                   {{"A", "B"}, {"C", "D"}});
}

// 3x3 asymmetric game with a unique Nash equilibrium that the iterated
// elimination strictly improves on.
inline pte::Game asymmetric_social_dilemma() {
  return make_game({3, 3},
                   {"6", "8", "1", "2", "4", "4",    // D row
                    "3", "1", "0", "7", "2", "3",    // E row
                    "7", "0", "8", "5", "5", "6"},   // F row
                   {{"D", "E", "F"}, {"A", "B", "C"}});
}

// Two players with one unit each, contributions none/half/all, pool factor
// 1.5. Exact decimal payoffs.
inline pte::Game goods_game() {
  return make_game({3, 3},
                   {"1", "1", "1.375", "0.5", "1.75", "0.75",
                    "0.5", "1.375", "1.25", "1.25", "1.625", "1.125",
                    "0.75", "1.7", "1.125", "1.625", "1.5", "1.5"},
                   {{"None", "Half", "All"}, {"None", "Half", "All"}});
}

// Price-setting duopoly; only the lowest price sells, ties share the market.
// Not in general position.
inline pte::Game bertrand() {
  return make_game({3, 3},
                   {"1", "1", "2", "0", "2", "0",
                    "0", "2", "2", "2", "4", "0",
                    "0", "2", "0", "4", "3", "3"},
                   {{"2", "4", "6"}, {"2", "4", "6"}});
}

// Compensation claims 2..4 with bonus/penalty 2. Not in general position.
inline pte::Game travelers_dilemma() {
  return make_game({3, 3},
                   {"2", "2", "3", "1", "3", "1",
                    "1", "3", "3", "3", "4", "2",
                    "1", "3", "2", "4", "4", "4"},
                   {{"2", "3", "4"}, {"2", "3", "4"}});
}

// Row A is minimax-dominated from the start; column D becomes dominated once
// A is gone. The fixpoint keeps rows {B,C} and columns {E,F}.
inline pte::Game minimax_demo_3x3() {
  return make_game({3, 3},
                   {"1", "5", "2", "3", "4", "1",
                    "3", "2", "6", "6", "9", "7",
                    "5", "4", "7", "8", "8", "9"},
                   {{"A", "B", "C"}, {"D", "E", "F"}});
}

// Game whose unique iterated-elimination equilibrium (B,F) does not survive
// iterated minimax deletion (which keeps only C and F).
inline pte::Game pte_not_minimax_3x3() {
  return make_game({3, 3},
                   {"1", "1", "2", "2", "3", "4",
                    "4", "5", "6", "8", "7", "9",
                    "5", "6", "8", "3", "9", "7"},
                   {{"A", "B", "C"}, {"D", "E", "F"}});
}

// Symmetric 3x3 game in general position with maximin tuple (5,5).
inline pte::Game symmetric_3x3() {
  return make_game({3, 3},
                   {"9", "9", "8", "6", "5", "1",
                    "6", "8", "7", "7", "4", "2",
                    "1", "5", "2", "4", "3", "3"},
                   {{"A", "B", "C"}, {"A", "B", "C"}});
}

inline pte::Game single_profile_game() { return make_game({1}, {"7"}); }

}  // namespace fixtures
