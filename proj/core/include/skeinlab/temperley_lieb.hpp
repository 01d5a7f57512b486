#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"

namespace skeinlab {

/**
 * Non-crossing perfect matching of n bottom and n top boundary points.
 *
 * Point i < n is bottom point i (left to right); point n + j is top point j
 * (left to right). The canonical encoding is the partner array, which is
 * unique per matching and gives a total order.
 */
class PlanarMatching {
 public:
  PlanarMatching() = default;

  static PlanarMatching identity(int n);
  /// e_i for 1 <= i <= n-1: cup/cap joining positions i and i+1.
  static PlanarMatching generator(int n, int i);
  /// Throws DomainError unless the partners form a non-crossing perfect matching.
  static PlanarMatching from_partners(int n, std::vector<std::uint8_t> partners);
  /// All Catalan(n) matchings, in canonical order.
  static std::vector<PlanarMatching> enumerate(int n);

  int strands() const { return strands_; }
  int partner(int point) const { return partners_[point]; }
  const std::vector<std::uint8_t>& partners() const { return partners_; }
  bool is_identity() const;

  /// Parenthesis word read around the boundary: bottom left to right, then top right to left.
  std::string to_string() const;

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;
  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  int strands_ = 0;
  std::vector<std::uint8_t> partners_;
};

/// Result of stacking `top` on `bottom`.
struct Composition {
  PlanarMatching matching;
  int loops = 0;
};

Composition compose(const PlanarMatching& bottom, const PlanarMatching& top);
/// m (x) id_extra: extra vertical strands on the right (or the left).
PlanarMatching tensor_identity(const PlanarMatching& m, int extra, bool on_right = true);
/// Loops formed by joining top point i to bottom point i for every i.
int closure_loops(const PlanarMatching& m);

/// Linear combination of planar matchings with rational coefficients.
class TLElement {
 public:
  explicit TLElement(int strands = 0) : strands_(strands) {}

  static TLElement identity(int n);
  static TLElement generator(int n, int i);
  static TLElement basis(const PlanarMatching& m);

  int strands() const { return strands_; }
  const std::map<PlanarMatching, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const PlanarMatching& m) const;

  void add(const PlanarMatching& m, const RationalFunction& c);
  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const RationalFunction& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.strands_ == b.strands_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int strands_;
  std::map<PlanarMatching, RationalFunction> terms_;
};

/// x * y: y stacked on top of x. Throws DomainError on a strand-count mismatch.
TLElement tl_multiply(const TLElement& x, const TLElement& y);
TLElement tensor_identity(const TLElement& x, int extra, bool on_right = true);
RationalFunction closure(const TLElement& x);
/// Closes the last `closed` strands (top j to bottom j on the right).
TLElement partial_trace(const TLElement& x, int closed);

/**
 * Jones-Wenzl projector f^(n) built by the Wenzl recursion.
 *
 * `numerators` / `common_denominator` is the same element with one shared
 * denominator; the evaluator consumes that form.
 */
struct JonesWenzl {
  int n = 0;
  TLElement element;
  LaurentPolynomial common_denominator;
  std::vector<std::pair<PlanarMatching, LaurentPolynomial>> numerators;
};

/// Memoized; safe to call concurrently.
const JonesWenzl& jones_wenzl(int n);

/// (f^(n) (x) id_m) * f^(m+n) == f^(m+n), exactly.
bool absorption_check(int m, int n);

}  // namespace skeinlab
