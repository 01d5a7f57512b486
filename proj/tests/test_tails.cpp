#include <gtest/gtest.h>

#include "skeinlab/errors.hpp"
#include "skeinlab/quantum.hpp"
#include "skeinlab/tails.hpp"
#include "support.hpp"

using namespace skeinlab;
using skeinlab::testing::fixture;
using skeinlab::testing::fixtures;

namespace {

InvariantCache& cache() {
  static InvariantCache c;
  return c;
}

LaurentPolynomial P(std::initializer_list<std::pair<int, long>> t) {
  std::vector<std::pair<int, Integer>> v;
  for (auto [e, c] : t) v.emplace_back(e, c);
  return LaurentPolynomial::from_terms(v);
}

}  // namespace

TEST(Doteq, AlignmentAndSign) {
  const auto p = P({{-3, 2}, {1, -1}, {5, 4}});
  for (int span : {1, 4, 9, 20}) {
    EXPECT_TRUE(doteq(p, -LaurentPolynomial::A(6) * p, span));
    EXPECT_TRUE(doteq(p, -LaurentPolynomial::A(6) * p, span, End::Highest));
  }
  EXPECT_TRUE(doteq(P({{0, 1}, {4, 1}}), P({{0, 1}, {4, 1}, {8, 1}}), 8));
  EXPECT_FALSE(doteq(P({{0, 1}, {4, 1}}), P({{0, 1}, {4, 1}, {8, 1}}), 9));
  EXPECT_FALSE(doteq(P({{0, 1}, {4, 1}}), P({{0, 1}, {4, -1}}), 5));
  EXPECT_TRUE(doteq(P({{0, 1}, {4, 1}}), P({{0, 1}, {4, -1}}), 4));
}

TEST(Doteq, ZeroAndSpanErrors) {
  EXPECT_THROW(doteq(LaurentPolynomial{}, LaurentPolynomial(1), 3), DomainError);
  EXPECT_THROW(doteq(LaurentPolynomial(1), LaurentPolynomial(1), 0), DomainError);
}

TEST(Doteq, MonotoneInSpan) {
  const auto a = colored_jones(fixture("5_2"), 2);
  const auto b = colored_jones(fixture("5_2"), 3);
  int last = 0;
  for (int span = 1; span <= 24; ++span)
    if (doteq(a, b, span)) last = span;
  EXPECT_GE(last, 8);
  for (int span = 1; span <= last; ++span) EXPECT_TRUE(doteq(a, b, span));
}

TEST(Doteq, RationalSeries) {
  // 1 / (1 - A^4) against 1 + A^4 + A^8
  RationalFunction f(1, LaurentPolynomial(1) - LaurentPolynomial::A(4));
  EXPECT_TRUE(doteq(f, RationalFunction(P({{0, 1}, {4, 1}, {8, 1}})), 12));
  EXPECT_FALSE(doteq(f, RationalFunction(P({{0, 1}, {4, 1}, {8, 1}})), 13));
}

TEST(Corollary, TrefoilInstance) {
  EXPECT_TRUE(doteq(colored_jones(fixture("3_1"), 2), colored_jones(fixture("3_1"), 3), 8));
}

TEST(Verify, SmallGrid) {
  for (const char* name : {"0_1", "3_1", "4_1", "L2a1"})
    for (int n = 1; n <= 2; ++n) {
      EXPECT_TRUE(verify_theorem_1(fixture(name), n, cache())) << name << n;
      EXPECT_TRUE(verify_theorem_2(fixture(name), n, cache())) << name << n;
      EXPECT_TRUE(verify_corollary(fixture(name), n, cache())) << name << n;
    }
  EXPECT_TRUE(verify_corollary(fixture("6_1"), 1, cache()));
}

TEST(Verify, RejectsNonAlternating) {
  auto d = parse_pd("X 4 2 5 1 / X 3 6 4 1 / X 5 2 6 3");
  EXPECT_THROW(verify_corollary(d, 1, cache()), DomainError);
  EXPECT_THROW(tail_prefix(d, 2, cache()), DomainError);
}

TEST(TailPrefix, Unknot) {
  const auto tp = tail_prefix(fixture("0_1"), 3, cache());
  EXPECT_EQ(tp.certified_length, 8);
  // Delta_3 = -(A^-6 + A^-2 + A^2 + A^6), normalized to a positive leading entry
  const std::vector<Integer> want{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};
  EXPECT_EQ(tp.coefficients, want);
  EXPECT_EQ(head_prefix(fixture("0_1"), 3, cache()).coefficients, tp.coefficients);
  EXPECT_THROW(tail_prefix(fixture("0_1"), 1, cache()), DomainError);
}

TEST(TailPrefix, TrefoilCertifiedLengthAndConsistency) {
  const auto t3 = tail_prefix(fixture("3_1"), 3, cache());
  EXPECT_EQ(t3.certified_length, 8);
  EXPECT_GT(t3.coefficients.front(), 0);
  const auto t4 = tail_prefix(fixture("3_1"), 4, cache());
  EXPECT_EQ(t4.certified_length, 12);
  EXPECT_EQ(std::vector<Integer>(t4.coefficients.begin(), t4.coefficients.begin() + 8), t3.certified());
}

TEST(TailPrefix, HeadVersusTail) {
  for (const char* amph : {"4_1", "6_3"})
    EXPECT_EQ(head_prefix(fixture(amph), 3, cache()).certified(), tail_prefix(fixture(amph), 3, cache()).certified()) << amph;
  EXPECT_NE(head_prefix(fixture("3_1"), 3, cache()).certified(), tail_prefix(fixture("3_1"), 3, cache()).certified());
  EXPECT_EQ(head_prefix(fixture("3_1"), 2, cache()).end, End::Highest);
}

TEST(StabilityReport, JsonIsDeterministic) {
  const auto a = stability_report(fixture("4_1"), 2, cache());
  InvariantCache fresh;
  const auto b = stability_report(fixture("4_1"), 2, fresh);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_FALSE(a.to_json().dump().find("seconds") != std::string::npos);
  EXPECT_TRUE(a.to_json(true).dump().find("seconds") != std::string::npos);
  ASSERT_TRUE(a.tail.has_value());
  EXPECT_EQ(a.tail->certified_length, 8);
  const std::string csv = a.to_csv_rows();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(InvariantCache, ConcurrentCallersShareOneValue) {
  InvariantCache c;
  std::vector<LaurentPolynomial> out(4);
  std::vector<std::thread> ts;
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { out[i] = c.colored_jones(fixture("5_1"), 2); });
  for (auto& t : ts) t.join();
  for (const auto& p : out) EXPECT_EQ(p, colored_jones(fixture("5_1"), 2));
}
