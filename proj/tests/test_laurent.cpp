#include <gtest/gtest.h>

#include <random>

#include "skeinlab/errors.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/quantum.hpp"
#include "skeinlab/rational.hpp"

using namespace skeinlab;

namespace {

LaurentPolynomial random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> exp(-12, 12), coeff(-5, 5);
  std::vector<std::pair<int, Integer>> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(exp(rng), coeff(rng));
  return LaurentPolynomial::from_terms(std::move(t));
}

}  // namespace

TEST(Laurent, ZeroAndConstants) {
  LaurentPolynomial z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_THROW((void)z.min_degree(), DomainError);
  EXPECT_EQ(LaurentPolynomial(1).to_string(), "1");
  EXPECT_EQ(LaurentPolynomial(3) - LaurentPolynomial(3), z);
}

TEST(Laurent, TextFormIsAscending) {
  auto p = -LaurentPolynomial::A(-9) + LaurentPolynomial::A(-1) + LaurentPolynomial::A(3) + LaurentPolynomial::A(7);
  EXPECT_EQ(p.to_string(), "-A^-9 + A^-1 + A^3 + A^7");
  EXPECT_EQ(LaurentPolynomial::parse(p.to_string()), p);
  auto q = LaurentPolynomial::from_terms({{0, 2}, {1, -3}, {-2, 1}});
  EXPECT_EQ(LaurentPolynomial::parse(q.to_string()), q);
  EXPECT_THROW(LaurentPolynomial::parse("A^^2"), InputError);
}

TEST(Laurent, JsonKeepsZeros) {
  auto p = LaurentPolynomial::from_terms({{-2, 1}, {2, -1}});
  auto j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"coeffs":[1,0,0,0,-1],"minDeg":-2})");
  EXPECT_EQ(polynomial_from_json(j), p);
}

TEST(Laurent, BigCoefficientsRoundTrip) {
  LaurentPolynomial p = LaurentPolynomial::monomial(Integer("123456789012345678901234567890"), 5) - 1;
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_EQ(LaurentPolynomial::parse(p.to_string()), p);
}

TEST(Laurent, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto p = random_poly(rng, 5), q = random_poly(rng, 4), r = random_poly(rng, 3);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(mirror_substitute(mirror_substitute(p)), p);
    EXPECT_EQ(mirror_substitute(p * q), mirror_substitute(p) * mirror_substitute(q));
    if (!q.is_zero()) {
      auto back = divide_exact(p * q, q);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, p);
    }
  }
}

TEST(Laurent, GcdDividesBoth) {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    auto p = random_poly(rng, 4), q = random_poly(rng, 4), g0 = random_poly(rng, 3);
    if (g0.is_zero() || p.is_zero() || q.is_zero()) continue;
    auto g = gcd(p * g0, q * g0);
    EXPECT_TRUE(divide_exact(p * g0, g).has_value());
    EXPECT_TRUE(divide_exact(q * g0, g).has_value());
    EXPECT_TRUE(divide_exact(g, gcd(g0, g0)).has_value());
  }
}

TEST(Laurent, DivideExactRejectsNonDivisors) {
  auto p = LaurentPolynomial::A(2) + 1;
  EXPECT_FALSE(divide_exact(p, LaurentPolynomial::A(1) + 1).has_value());
  EXPECT_FALSE(divide_exact(LaurentPolynomial(1), LaurentPolynomial(2)).has_value());
}

TEST(Rational, CanonicalForm) {
  auto d = loop_value();
  RationalFunction f(d * d, d);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.to_laurent(), d);
  RationalFunction g(1, d);
  EXPECT_FALSE(g.is_laurent());
  EXPECT_EQ(g * RationalFunction(d), RationalFunction(1));
  EXPECT_EQ(RationalFunction(2, 4), RationalFunction(LaurentPolynomial(1), LaurentPolynomial(2)));
}

TEST(Rational, SeriesExpansion) {
  // 1 / (1 - A^2) = 1 + A^2 + A^4 + ...
  RationalFunction f(1, LaurentPolynomial(1) - LaurentPolynomial::A(2));
  EXPECT_EQ(min_degree(f), 0);
  auto c = lowest_coefficients(f, 6);
  std::vector<Integer> want{1, 0, 1, 0, 1, 0};
  EXPECT_EQ(c, want);
  // A^-3 / delta = -A^-1 (1 + A^4)^-1 = -A^-1 + A^3 - ...
  RationalFunction g(LaurentPolynomial::A(-3), loop_value());
  EXPECT_EQ(min_degree(g), -1);
  auto gc = lowest_coefficients(g, 5);
  std::vector<Integer> want_g{-1, 0, 0, 0, 1};
  EXPECT_EQ(gc, want_g);
}

TEST(Quantum, DeltaClosedForm) {
  // Delta_n * (A^2 - A^-2) = (-1)^n (A^(2n+2) - A^(-2n-2))
  const auto q = LaurentPolynomial::A(2) - LaurentPolynomial::A(-2);
  for (int n = 0; n <= 10; ++n) {
    LaurentPolynomial rhs = LaurentPolynomial::A(2 * n + 2) - LaurentPolynomial::A(-2 * n - 2);
    if (n % 2) rhs = -rhs;
    EXPECT_EQ(delta(n) * q, rhs) << n;
  }
  EXPECT_EQ(delta(1), loop_value());
}

TEST(Quantum, BinomialSymmetryAndEdges) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(quantum_binomial(n, 0), LaurentPolynomial(1));
    for (int k = 0; k <= n; ++k) {
      auto b = quantum_binomial(n, k);
      EXPECT_FALSE(b.is_zero());
    }
  }
  EXPECT_THROW(expansion_coefficient_C(2, 3), DomainError);
  EXPECT_EQ(expansion_coefficient_C(1, 0), LaurentPolynomial::A(1));
  EXPECT_EQ(expansion_coefficient_C(1, 1), LaurentPolynomial::A(-1));
}
