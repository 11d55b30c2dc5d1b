#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pte/errors.hpp"
#include "pte/rational.hpp"

namespace pte {

enum class NewcombAction { one_box, two_box };
enum class BoxState { full, empty };
enum class DecisionTheory { cdt, edt, nndt };

/// A Newcomb-style decision problem: payoffs per (action, predicted box
/// state), a prior on the opaque box being full (used by CDT), and the
/// predictor's accuracy (used by EDT and NNDT; 1 = the classical perfect
/// predictor).
struct NewcombProblem {
  Rational payoff_one_full;
  Rational payoff_one_empty;
  Rational payoff_two_full;
  Rational payoff_two_empty;
  Rational prior_full = Rational(1, 2);
  Rational accuracy = 1;

  static NewcombProblem canonical() {
    NewcombProblem p;
    p.payoff_two_full = 1001000;
    p.payoff_one_full = 1000000;
    p.payoff_two_empty = 1000;
    p.payoff_one_empty = 0;
    return p;
  }

  const Rational& payoff(NewcombAction action, BoxState state) const {
    if (action == NewcombAction::one_box)
      return state == BoxState::full ? payoff_one_full : payoff_one_empty;
    return state == BoxState::full ? payoff_two_full : payoff_two_empty;
  }

  void validate() const {
    check_probability(prior_full, "prior");
    check_probability(accuracy, "accuracy");
  }

 private:
  static void check_probability(const Rational& p, const std::string& what) {
    if (p < Rational(0) || Rational(1) < p)
      throw PreconditionError("NewcombProblem: " + what + " must lie in [0,1], got " + p.str());
  }
};

struct TheoryVerdict {
  Rational expected_one;
  Rational expected_two;
  std::optional<NewcombAction> recommendation;  // disengaged on a tie
  bool tie = false;
};

/// Expected utility of each action under the chosen decision theory.
///
/// CDT holds the prediction counterfactually independent of the action, so
/// both actions weigh the box states by the prior. EDT conditions the state
/// on the action taken (P(full | one-box) = accuracy). NNDT makes the
/// prediction counterfactually track the action (P(one-box > full) =
/// accuracy); with the symmetric parameterization used here its numbers
/// coincide with EDT's even though the probabilities mean different things.
inline TheoryVerdict expected_utilities(const NewcombProblem& problem, DecisionTheory theory) {
  problem.validate();
  const Rational one = 1;
  TheoryVerdict verdict;
  switch (theory) {
    case DecisionTheory::cdt: {
      const Rational& p = problem.prior_full;
      verdict.expected_one = problem.payoff_one_full * p + problem.payoff_one_empty * (one - p);
      verdict.expected_two = problem.payoff_two_full * p + problem.payoff_two_empty * (one - p);
      break;
    }
    case DecisionTheory::edt:
    case DecisionTheory::nndt: {
      const Rational& q = problem.accuracy;
      verdict.expected_one = problem.payoff_one_full * q + problem.payoff_one_empty * (one - q);
      verdict.expected_two = problem.payoff_two_empty * q + problem.payoff_two_full * (one - q);
      break;
    }
  }
  if (verdict.expected_one == verdict.expected_two) {
    verdict.tie = true;
  } else {
    verdict.recommendation = verdict.expected_two < verdict.expected_one ? NewcombAction::one_box
                                                                         : NewcombAction::two_box;
  }
  return verdict;
}

struct SweepPoint {
  Rational parameter;  // prior for CDT, accuracy for EDT/NNDT
  TheoryVerdict verdict;
};

/// Evaluates the theory across a parameter grid, in grid order.
inline std::vector<SweepPoint> recommendation_sweep(const NewcombProblem& problem, DecisionTheory theory,
                                                    const std::vector<Rational>& grid) {
  if (grid.empty()) throw std::invalid_argument("recommendation_sweep: empty parameter grid");
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (const Rational& value : grid) {
    NewcombProblem variant = problem;
    if (theory == DecisionTheory::cdt)
      variant.prior_full = value;
    else
      variant.accuracy = value;
    points.push_back(SweepPoint{value, expected_utilities(variant, theory)});
  }
  return points;
}

inline std::string to_string(NewcombAction action) {
  return action == NewcombAction::one_box ? "one-box" : "two-box";
}

inline std::string to_string(DecisionTheory theory) {
  switch (theory) {
    case DecisionTheory::cdt: return "cdt";
    case DecisionTheory::edt: return "edt";
    case DecisionTheory::nndt: return "nndt";
  }
  return "";
}

}  // namespace pte
