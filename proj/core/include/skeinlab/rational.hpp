#pragma once

#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/**
 * Element of Q(A), stored as numerator / denominator in Z[A, A^-1].
 *
 * Canonical form: gcd(num, den) = 1 in Z[A] (content included), the
 * denominator has minimum degree 0 and a positive highest coefficient. Two
 * values are equal iff their fields are equal.
 */
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(LaurentPolynomial p)  // NOLINT(google-explicit-constructor)
      : num_(std::move(p)), den_(1) {
    normalize_unit_denominator();
  }
  RationalFunction(long c) : RationalFunction(LaurentPolynomial(c)) {}  // NOLINT
  /// Throws DomainError if den is zero.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is +-A^k.
  bool is_laurent() const { return den_.is_unit(); }
  /// Checked demotion; throws InternalError when the denominator is not a unit.
  LaurentPolynomial to_laurent() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  void normalize_unit_denominator();

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// Lowest exponent of the expansion at A = 0. Throws DomainError on zero.
int min_degree(const RationalFunction& f);
/// A -> A^-1.
RationalFunction mirror_substitute(const RationalFunction& f);
/// Coefficients of A^d, A^(d+1), ... of the expansion at A = 0, d = min_degree(f).
/// Throws DomainError if a coefficient is not an integer.
std::vector<Integer> lowest_coefficients(const RationalFunction& f, int count);

}  // namespace skeinlab
