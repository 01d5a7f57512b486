#include <gtest/gtest.h>

#include "skeinlab/colored_states.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/quantum.hpp"
#include "support.hpp"

using namespace skeinlab;
using skeinlab::testing::combine;
using skeinlab::testing::fixture;
using skeinlab::testing::fixtures;

TEST(ColoredState, Masks) {
  auto s = ColoredState::from_mask(3, 2, 0b101);
  EXPECT_EQ(s.signs, (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(s.sum(), 1);
  EXPECT_EQ(ColoredState::all_minus(4, 2).sum(), -4);
}

TEST(ColoredSkein, TwoTermRelationColorTwo) {
  for (int n = 1; n <= 2; ++n) {
    const auto r = colored_smoothing_expand(n);
    EXPECT_EQ(r.a_side.coefficient, LaurentPolynomial::A(2 * n - 1));
    EXPECT_EQ(r.b_side.coefficient, LaurentPolynomial::A(1 - 2 * n));
    const auto lhs = evaluate_open(r.crossing.tangle);
    const auto rhs = combine({{r.a_side.coefficient, evaluate_open(r.a_side.tangle)},
                              {r.b_side.coefficient, evaluate_open(r.b_side.tangle)}});
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(ColoredSkein, FullExpansionColorTwo) {
  for (int n = 1; n <= 2; ++n) {
    const auto lhs = evaluate_open(colored_smoothing_expand(n).crossing.tangle);
    std::vector<std::pair<LaurentPolynomial, TangleVector>> parts;
    const auto terms = full_crossing_expansion(n);
    ASSERT_EQ(static_cast<int>(terms.size()), n + 1);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(terms[k].coefficient, expansion_coefficient_C(n, k));
      parts.push_back({terms[k].coefficient, evaluate_open(terms[k].tangle)});
    }
    EXPECT_EQ(lhs, combine(parts)) << n;
  }
}

TEST(ColoredStates, StateSumEqualsColoredJones) {
  for (const char* name : {"3_1", "4_1", "L2a1"})
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(colored_state_sum(fixture(name), n), colored_jones(fixture(name), n)) << name << " " << n;
  EXPECT_EQ(colored_state_sum(fixture("5_2"), 2), colored_jones(fixture("5_2"), 2));
}

TEST(ColoredStates, UpsilonColorOneIsKauffmanState) {
  // at n = 1 the all-minus B-state is a union of circles
  const auto& t = fixture("3_1");
  const auto u = build_upsilon(t, 1, ColoredState::all_minus(3, 1));
  EXPECT_EQ(evaluate(u), loop_value().pow(apply_state(t, all_B_state(t)).circles));
  EXPECT_EQ(alpha(t, 1, ColoredState::all_minus(3, 1)), LaurentPolynomial::A(-3));
}

TEST(ColoredStates, LambdaExpansionShape) {
  const auto& t = fixture("3_1");
  const auto terms = lambda_expand(t, 3, ColoredState::all_minus(3, 3));
  ASSERT_EQ(terms.size(), 27u);
  EXPECT_EQ(terms.front().index, (ExpansionIndex{0, 0, 0}));
  EXPECT_EQ(terms[1].index, (ExpansionIndex{0, 0, 1}));
  EXPECT_EQ(terms.back().index, (ExpansionIndex{2, 2, 2}));
  for (const auto& term : terms) {
    EXPECT_TRUE(term.diagram.is_crossingless());
    EXPECT_EQ(term.coefficient, lambda_coefficient(3, term.index));
  }
  EXPECT_THROW(build_lambda(t, 3, ColoredState::all_minus(3, 3), {0, 3, 0}), DomainError);
}

TEST(ColoredStates, TopLambdaIsCableBState) {
  for (const char* name : {"3_1", "4_1", "6_2"}) {
    const auto& d = fixture(name);
    for (int n = 2; n <= 3; ++n) {
      ExpansionIndex top(d.crossing_count(), n - 1);
      const auto lam = build_lambda(d, n, ColoredState::all_minus(d.crossing_count(), n), top);
      EXPECT_EQ(D_degree(lam), -2 * n * apply_state(d, all_B_state(d)).circles) << name;
      EXPECT_TRUE(is_adequate_skein(lam)) << name;
    }
  }
}

TEST(ColoredStates, NonAdequateSkeinDetected) {
  // f^(2) closed by a cap below and a cup above: one circle through the box twice, value 0
  DecoratedDiagram s;
  const int box = s.add_projector(2);
  s.connect({box, 0}, {box, 1});
  s.connect({box, 2}, {box, 3});
  EXPECT_FALSE(is_adequate_skein(s));
  EXPECT_TRUE(evaluate(s).is_zero());
  // closed straight up it is adequate and Delta_2 starts at A^-4
  DecoratedDiagram t;
  const int b = t.add_projector(2);
  t.connect({b, 0}, {b, 2});
  t.connect({b, 1}, {b, 3});
  EXPECT_TRUE(is_adequate_skein(t));
  EXPECT_EQ(min_degree(evaluate_rational(t)), D_degree(t));
}

TEST(ColoredStates, AdequateKinkLambdasMeetTheirDegree) {
  auto kink = parse_pd("X 1 1 2 2");
  for (int sign : {1, -1})
    for (int i = 0; i < 2; ++i) {
      const ColoredState s{2, {sign}};
      const auto lam = build_lambda(kink, 2, s, {i});
      const auto v = evaluate_rational(lam);
      ASSERT_FALSE(v.is_zero());
      EXPECT_GE(min_degree(v), D_degree(lam));
      if (is_adequate_skein(lam)) EXPECT_EQ(min_degree(v), D_degree(lam));
    }
}

TEST(DegreeLemmas, SmallFixtures) {
  for (const char* name : {"3_1", "4_1", "L2a1", "L4a1"}) {
    const auto report = verify_degree_lemmas(fixture(name), 2);
    EXPECT_TRUE(report.pass()) << report.to_json().dump();
    EXPECT_EQ(report.checks.size(), 10u);
  }
}
