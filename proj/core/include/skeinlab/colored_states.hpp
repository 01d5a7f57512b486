#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/skein_eval.hpp"

namespace skeinlab {

/// Colored smoothing choice per crossing: +1 (A side) or -1 (B side).
struct ColoredState {
  int n = 1;
  std::vector<int> signs;

  static ColoredState all_plus(int crossings, int n) { return {n, std::vector<int>(crossings, 1)}; }
  static ColoredState all_minus(int crossings, int n) { return {n, std::vector<int>(crossings, -1)}; }
  /// Bit c of mask set means crossing c takes +1.
  static ColoredState from_mask(int crossings, int n, unsigned long mask);
  int sum() const;
};

/// One residual expansion term per crossing, each index in 0..n-1.
using ExpansionIndex = std::vector<int>;

/// A local open tangle with its coefficient. Boundary point side*n + t is
/// geometric position t on side S, E, N, W (slot order a, b, c, d).
struct LocalTerm {
  LaurentPolynomial coefficient;
  DecoratedDiagram tangle;
};

/// The n-colored crossing with f^(n) on all four legs, and its two colored
/// smoothings with coefficients A^(2n-1) and A^-(2n-1).
struct ColoredSkeinRelation {
  LocalTerm crossing;
  LocalTerm a_side;
  LocalTerm b_side;
};
ColoredSkeinRelation colored_smoothing_expand(int n);

/// Planar terms of the full expansion of an n-colored crossing: term k has k
/// B-type arcs and coefficient C(n, k).
std::vector<LocalTerm> full_crossing_expansion(int n);

/// Upsilon^(n)(s): colored smoothings at every crossing, f^(n) on every edge.
DecoratedDiagram build_upsilon(const LinkDiagram& d, int n, const ColoredState& s);
/// A^((2n-1) * sum of signs).
LaurentPolynomial alpha(const LinkDiagram& d, int n, const ColoredState& s);
/// Sum of alpha(s) * <Upsilon(s)> over all 2^k colored states.
LaurentPolynomial colored_state_sum(const LinkDiagram& d, int n, const EvalOptions& opts = {}, int jobs = 1);

/// Crossingless Lambda_{s, i}: crossing j carries i_j + [s_j = -1] B-type arcs.
DecoratedDiagram build_lambda(const LinkDiagram& d, int n, const ColoredState& s, const ExpansionIndex& index);
/// Product of C(n-1, i_j).
LaurentPolynomial lambda_coefficient(int n, const ExpansionIndex& index);

struct LambdaTerm {
  ExpansionIndex index;
  LaurentPolynomial coefficient;
  DecoratedDiagram diagram;
};
/// All n^k terms in lexicographic index order.
std::vector<LambdaTerm> lambda_expand(const LinkDiagram& d, int n, const ColoredState& s, const EvalOptions& opts = {});

/// -2 * (circles after replacing every projector by the identity).
int D_degree(const DecoratedDiagram& s);
/// Every identity-replaced circle meets each projector at most once.
bool is_adequate_skein(const DecoratedDiagram& s);

struct LemmaCheck {
  std::string name;
  bool pass = false;
  nlohmann::json details;
};

struct DegreeLemmaReport {
  std::string link;
  int n = 0;
  std::vector<LemmaCheck> checks;
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Degree identities behind the tail theorem, checked exactly on one diagram.
DegreeLemmaReport verify_degree_lemmas(const LinkDiagram& d, int n, const EvalOptions& opts = {}, int jobs = 1);

}  // namespace skeinlab
