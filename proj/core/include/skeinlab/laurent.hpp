#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace skeinlab {

using Integer = mpz_class;

/**
 * Exact element of Z[A, A^-1].
 *
 * Terms are kept sorted by exponent with no zero coefficient stored, so the
 * zero polynomial is the empty term list and equality is term-wise.
 */
class LaurentPolynomial {
 public:
  struct Term {
    int exponent;
    Integer coeff;

    friend bool operator==(const Term& a, const Term& b) {
      return a.exponent == b.exponent && a.coeff == b.coeff;
    }
  };

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPolynomial monomial(Integer coeff, int exponent);
  /// A^exponent.
  static LaurentPolynomial A(int exponent = 1) { return monomial(1, exponent); }
  /// Builds from unsorted (exponent, coeff) pairs; repeated exponents add up.
  static LaurentPolynomial from_terms(std::vector<std::pair<int, Integer>> terms);
  /// Coefficients of A^min_deg, A^(min_deg+1), ... (zeros allowed).
  static LaurentPolynomial from_dense(int min_deg, const std::vector<Integer>& coeffs);
  /// Parses the text form produced by to_string(), e.g. "-A^-9 + A^-1 + 2*A^3".
  static LaurentPolynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for +-A^k.
  bool is_unit() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Least exponent with nonzero coefficient. Throws DomainError on zero.
  int min_degree() const;
  int max_degree() const;
  Integer coefficient(int exponent) const;
  const Integer& lowest_coefficient() const;
  const Integer& highest_coefficient() const;
  /// Coefficients from min_degree() to max_degree(), zeros included.
  std::vector<Integer> dense_coefficients() const;

  LaurentPolynomial shifted(int k) const;
  LaurentPolynomial mirrored() const;
  LaurentPolynomial pow(unsigned e) const;
  /// Divides every coefficient by c; requires exact divisibility.
  LaurentPolynomial divided_by_integer(const Integer& c) const;
  Integer content() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& q);
  LaurentPolynomial& operator-=(const LaurentPolynomial& q);
  LaurentPolynomial& operator*=(const LaurentPolynomial& q);
  LaurentPolynomial& operator*=(const Integer& c);
  /// In-place multiply by c*A^k.
  void scale(const Integer& c, int k);
  /// *this += c * A^k * q, without temporaries for the common case.
  void add_scaled(const LaurentPolynomial& q, const Integer& c, int k);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial p, const LaurentPolynomial& q) { return p += q; }
  friend LaurentPolynomial operator-(LaurentPolynomial p, const LaurentPolynomial& q) { return p -= q; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend bool operator==(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return p.terms_ == q.terms_;
  }

  /// "-A^-9 + A^-1 + A^3 + A^7", ascending exponents; "0" for zero.
  std::string to_string() const;

 private:
  explicit LaurentPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

/// A -> A^-1. Ring automorphism and involution.
inline LaurentPolynomial mirror_substitute(const LaurentPolynomial& p) { return p.mirrored(); }

/// Least exponent (the d-degree). Throws DomainError("degree of zero undefined").
inline int min_degree(const LaurentPolynomial& p) { return p.min_degree(); }

/// q with p == q * d, if one exists in Z[A, A^-1].
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p, const LaurentPolynomial& d);

/// Greatest common divisor in Z[A, A^-1], normalized to min degree 0 and a
/// positive highest coefficient. gcd(0, 0) is 0.
LaurentPolynomial gcd(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// {"minDeg": d, "coeffs": [c_d, ..., c_D]}. Coefficients that do not fit in
/// 64 bits are written as decimal strings.
nlohmann::json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace skeinlab
