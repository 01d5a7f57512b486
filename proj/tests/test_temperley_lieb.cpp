#include <gtest/gtest.h>

#include "skeinlab/errors.hpp"
#include "skeinlab/quantum.hpp"
#include "skeinlab/temperley_lieb.hpp"

using namespace skeinlab;

TEST(PlanarMatching, CatalanCounts) {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(PlanarMatching::enumerate(n).size(), static_cast<std::size_t>(catalan[n]));
}

TEST(PlanarMatching, RejectsCrossingPartners) {
  EXPECT_THROW(PlanarMatching::from_partners(2, {3, 2, 1, 0}), DomainError);
  EXPECT_NO_THROW(PlanarMatching::from_partners(2, {1, 0, 3, 2}));
}

TEST(PlanarMatching, GeneratorRelations) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      auto e = PlanarMatching::generator(n, i);
      auto ee = compose(e, e);
      EXPECT_EQ(ee.matching, e);
      EXPECT_EQ(ee.loops, 1);
      if (i + 1 < n) {
        auto f = PlanarMatching::generator(n, i + 1);
        EXPECT_EQ(compose(compose(e, f).matching, e).matching, e);
        EXPECT_EQ(compose(compose(e, f).matching, e).loops, 0);
      }
    }
}

TEST(PlanarMatching, ClosureLoops) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(closure_loops(PlanarMatching::identity(n)), n);
  EXPECT_EQ(closure_loops(PlanarMatching::generator(3, 1)), 2);
}

TEST(JonesWenzl, SmallCases) {
  EXPECT_EQ(jones_wenzl(1).element, TLElement::identity(1));
  // f2 = 1 - e1 / delta
  TLElement f2 = TLElement::identity(2);
  TLElement e = TLElement::generator(2, 1);
  e *= RationalFunction(LaurentPolynomial(-1), loop_value());
  EXPECT_EQ(jones_wenzl(2).element, f2 + e);
}

TEST(JonesWenzl, CommonDenominatorFormAgrees) {
  for (int n = 1; n <= 5; ++n) {
    const auto& jw = jones_wenzl(n);
    TLElement rebuilt(n);
    for (const auto& [m, c] : jw.numerators) rebuilt.add(m, RationalFunction(c, jw.common_denominator));
    EXPECT_EQ(rebuilt, jw.element) << n;
  }
}

TEST(JonesWenzl, AbsorptionAndTrace) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(absorption_check(m, n)) << m << "," << n;
  // partial trace of f^(n) on one strand is (Delta_n / Delta_(n-1)) f^(n-1)
  for (int n = 2; n <= 4; ++n) {
    TLElement want = jones_wenzl(n - 1).element;
    want *= RationalFunction(delta(n), delta(n - 1));
    EXPECT_EQ(partial_trace(jones_wenzl(n).element, 1), want) << n;
  }
}

TEST(TLElement, MultiplicationChecksStrands) {
  EXPECT_THROW(tl_multiply(TLElement::identity(2), TLElement::identity(3)), DomainError);
}
