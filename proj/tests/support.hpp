#pragma once

#include <utility>
#include <vector>

#include "skeinlab/fixtures.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/skein_eval.hpp"

namespace skeinlab::testing {

inline const FixtureSet& fixtures() {
  static const FixtureSet set = load_default_fixtures();
  return set;
}

inline const LinkDiagram& fixture(const std::string& name) { return fixtures().get(name).diagram; }

/// sum of c_i * v_i with zero entries dropped.
inline TangleVector combine(const std::vector<std::pair<LaurentPolynomial, TangleVector>>& parts) {
  TangleVector out;
  for (const auto& [c, v] : parts)
    for (const auto& [key, r] : v) out[key] += RationalFunction(c) * r;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// p == u * q for a unit u = +-A^k.
inline bool unit_multiple(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto u = divide_exact(p, q);
  return u && u->is_unit();
}

}  // namespace skeinlab::testing
