#include <doctest.h>

#include "pte/newcomb.hpp"
#include "pte/sampler.hpp"

using namespace pte;

TEST_CASE("causal reasoning always takes both boxes") {
  NewcombProblem problem = NewcombProblem::canonical();
  problem.prior_full = Rational(1, 2);
  const TheoryVerdict verdict = expected_utilities(problem, DecisionTheory::cdt);
  CHECK(verdict.expected_one == Rational(500000));
  CHECK(verdict.expected_two == Rational(501000));
  CHECK(verdict.recommendation == NewcombAction::two_box);
  CHECK_FALSE(verdict.tie);
}

TEST_CASE("evidential and counterfactual reasoning take one box at accuracy 1") {
  const NewcombProblem problem = NewcombProblem::canonical();
  for (const auto theory : {DecisionTheory::edt, DecisionTheory::nndt}) {
    const TheoryVerdict verdict = expected_utilities(problem, theory);
    CHECK(verdict.expected_one == Rational(1000000));
    CHECK(verdict.expected_two == Rational(1000));
    CHECK(verdict.recommendation == NewcombAction::one_box);
  }
}

TEST_CASE("imperfect predictors shift the evidential verdict") {
  NewcombProblem problem = NewcombProblem::canonical();
  problem.accuracy = Rational(1, 2);
  const TheoryVerdict verdict = expected_utilities(problem, DecisionTheory::edt);
  CHECK(verdict.expected_one == Rational(500000));
  CHECK(verdict.expected_two == Rational(501000));
  CHECK(verdict.recommendation == NewcombAction::two_box);
}

TEST_CASE("the causal gap between the actions is the visible-box difference") {
  // E_two - E_one collapses to u(two,empty) - u(one,empty) for every prior.
  const NewcombProblem base = NewcombProblem::canonical();
  SplitMix64 rng(4242);
  for (int k = 0; k < 50; ++k) {
    NewcombProblem problem = base;
    problem.prior_full = Rational(static_cast<std::int64_t>(rng.below(1001)), 1000);
    const TheoryVerdict verdict = expected_utilities(problem, DecisionTheory::cdt);
    CHECK(verdict.expected_two - verdict.expected_one == Rational(1000));
  }
}

TEST_CASE("evidential and counterfactual numbers coincide at equal accuracy") {
  SplitMix64 rng(777);
  for (int k = 0; k < 50; ++k) {
    NewcombProblem problem = NewcombProblem::canonical();
    problem.accuracy = Rational(static_cast<std::int64_t>(rng.below(1001)), 1000);
    const TheoryVerdict edt = expected_utilities(problem, DecisionTheory::edt);
    const TheoryVerdict nndt = expected_utilities(problem, DecisionTheory::nndt);
    CHECK(edt.expected_one == nndt.expected_one);
    CHECK(edt.expected_two == nndt.expected_two);
  }
}

TEST_CASE("exact tie between the actions is reported as one") {
  NewcombProblem problem = NewcombProblem::canonical();
  problem.accuracy = Rational(1001, 2000);  // 1000000*q == 1001000 - 1000000*q
  const TheoryVerdict verdict = expected_utilities(problem, DecisionTheory::edt);
  CHECK(verdict.tie);
  CHECK_FALSE(verdict.recommendation.has_value());
  CHECK(verdict.expected_one == Rational(500500));
  CHECK(verdict.expected_two == Rational(500500));
}

TEST_CASE("recommendation sweeps") {
  const NewcombProblem problem = NewcombProblem::canonical();

  const auto cdt = recommendation_sweep(problem, DecisionTheory::cdt, {Rational(0), Rational(1, 2), Rational(1)});
  REQUIRE(cdt.size() == 3);
  for (const auto& point : cdt) CHECK(point.verdict.recommendation == NewcombAction::two_box);

  const auto edt = recommendation_sweep(problem, DecisionTheory::edt, {Rational(0), Rational(1)});
  CHECK(edt[0].verdict.recommendation == NewcombAction::two_box);
  CHECK(edt[1].verdict.recommendation == NewcombAction::one_box);

  const auto nndt = recommendation_sweep(problem, DecisionTheory::nndt, {Rational(1)});
  CHECK(nndt[0].verdict.recommendation == NewcombAction::one_box);

  CHECK_THROWS_AS(recommendation_sweep(problem, DecisionTheory::cdt, {}), std::invalid_argument);
}

TEST_CASE("probabilities outside the unit interval are rejected") {
  NewcombProblem problem = NewcombProblem::canonical();
  problem.prior_full = Rational(3, 2);
  CHECK_THROWS_AS(expected_utilities(problem, DecisionTheory::cdt), PreconditionError);
  problem = NewcombProblem::canonical();
  problem.accuracy = Rational(-1, 10);
  CHECK_THROWS_AS(expected_utilities(problem, DecisionTheory::edt), PreconditionError);
}
