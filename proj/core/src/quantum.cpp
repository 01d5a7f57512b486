#include "skeinlab/quantum.hpp"

#include <string>

#include "skeinlab/errors.hpp"

namespace skeinlab {

const LaurentPolynomial& loop_value() {
  static const LaurentPolynomial d = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  return d;
}

QuantumScalarTable& QuantumScalarTable::instance() {
  static QuantumScalarTable table;
  return table;
}

const LaurentPolynomial& QuantumScalarTable::delta(int n) {
  if (n < 0) throw DomainError("delta index must be nonnegative");
  std::lock_guard lock(mutex_);
  if (auto it = delta_.find(n); it != delta_.end()) return it->second;
  if (delta_.empty()) {
    delta_.emplace(0, LaurentPolynomial(1));
    delta_.emplace(1, loop_value());
  }
  for (int m = static_cast<int>(delta_.size()); m <= n; ++m)
    delta_.emplace(m, loop_value() * delta_.at(m - 1) - delta_.at(m - 2));
  return delta_.at(n);
}

const LaurentPolynomial& QuantumScalarTable::binomial(int n, int k) {
  static const LaurentPolynomial zero;
  if (n < 0 || k < 0 || k > n) return zero;
  std::lock_guard lock(mutex_);
  if (auto it = binomial_.find({n, k}); it != binomial_.end()) return it->second;
  LaurentPolynomial value;
  if (k == 0 || k == n) {
    value = LaurentPolynomial(1);
  } else {
    value = binomial(n - 1, k).shifted(2 * k) + binomial(n - 1, k - 1).shifted(2 * k - 2 * n);
  }
  return binomial_.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

const LaurentPolynomial& QuantumScalarTable::expansion_coefficient(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("C(n,k) requires 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::lock_guard lock(mutex_);
  if (auto it = expansion_.find({n, k}); it != expansion_.end()) return it->second;
  LaurentPolynomial value = binomial(n, k).shifted(n * (n - 2 * k));
  return expansion_.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

const LaurentPolynomial& QuantumScalarTable::cyclotomic_in_a2(int d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  std::lock_guard lock(mutex_);
  if (auto it = cyclotomic_.find(d); it != cyclotomic_.end()) return it->second;
  // Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q), with q = A^2.
  LaurentPolynomial value = LaurentPolynomial::A(2 * d) - LaurentPolynomial(1);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = divide_exact(value, cyclotomic_in_a2(e));
    if (!q) throw InternalError("cyclotomic division failed");
    value = std::move(*q);
  }
  return cyclotomic_.emplace(d, std::move(value)).first->second;
}

const LaurentPolynomial& expansion_coefficient_C(int n, int k) {
  return QuantumScalarTable::instance().expansion_coefficient(n, k);
}

}  // namespace skeinlab
