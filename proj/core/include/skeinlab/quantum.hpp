#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Loop value -A^2 - A^-2.
const LaurentPolynomial& loop_value();

/**
 * Memoized quantum scalars: Delta_n, quantum binomials [n k]_A and the full
 * colored-crossing expansion coefficients C_{n,k}.
 *
 * Entries are computed once under a lock and never mutated afterwards, so
 * references returned by the accessors stay valid for the program lifetime.
 */
class QuantumScalarTable {
 public:
  static QuantumScalarTable& instance();

  /// Delta_n via Delta_{n+1} = delta * Delta_n - Delta_{n-1}, Delta_0 = 1.
  const LaurentPolynomial& delta(int n);
  /// [n k]_A from [n k] = A^{2k}[n-1 k] + A^{2k-2n}[n-1 k-1]; zero outside 0..n.
  const LaurentPolynomial& binomial(int n, int k);
  /// C_{n,k} = A^{n(n-2k)} [n k]_A.
  const LaurentPolynomial& expansion_coefficient(int n, int k);
  /// Phi_d(A^2), the d-th cyclotomic polynomial evaluated at A^2.
  const LaurentPolynomial& cyclotomic_in_a2(int d);

 private:
  QuantumScalarTable() = default;

  std::recursive_mutex mutex_;
  std::map<int, LaurentPolynomial> delta_;
  std::map<std::pair<int, int>, LaurentPolynomial> binomial_;
  std::map<std::pair<int, int>, LaurentPolynomial> expansion_;
  std::map<int, LaurentPolynomial> cyclotomic_;
};

inline const LaurentPolynomial& delta(int n) { return QuantumScalarTable::instance().delta(n); }

inline const LaurentPolynomial& quantum_binomial(int n, int k) {
  return QuantumScalarTable::instance().binomial(n, k);
}

/// Throws DomainError unless 0 <= k <= n.
const LaurentPolynomial& expansion_coefficient_C(int n, int k);

}  // namespace skeinlab
