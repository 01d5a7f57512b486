#pragma once

#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"
#include "skeinlab/skein_eval.hpp"

namespace skeinlab {

enum class End { Lowest, Highest };
std::string to_string(End e);

/// `count` coefficients starting at the extreme exponent of the chosen end and
/// moving inward, zeros included. For a rational function these are the
/// coefficients of its expansion at A = 0 (lowest) or A = infinity (highest).
std::vector<Integer> end_coefficients(const RationalFunction& f, int count, End end);

/// p and q agree over `span` consecutive exponents from the chosen end after
/// both ends are moved to degree 0, possibly up to one overall sign.
/// Throws DomainError on zero input or span < 1.
bool doteq(const LaurentPolynomial& p, const LaurentPolynomial& q, int span, End end = End::Lowest);
bool doteq(const RationalFunction& p, const RationalFunction& q, int span, End end = End::Lowest);

struct CoefficientPrefix {
  std::string source;
  End end = End::Lowest;
  /// Every coefficient of the source from the aligned end inward, sign
  /// normalized so the first entry is positive.
  std::vector<Integer> coefficients;
  int certified_length = 0;

  std::vector<Integer> certified() const;
  nlohmann::json to_json() const;
};

/**
 * Memo of colored Jones values and colored B-state values keyed by PD text.
 * Safe to share between threads; each value is computed once and other
 * callers wait for it.
 */
class InvariantCache {
 public:
  explicit InvariantCache(EvalOptions opts = {}) : opts_(opts) {}

  LaurentPolynomial colored_jones(const LinkDiagram& d, int n);
  /// <Upsilon^(n)(s_-)>, without the alpha factor.
  RationalFunction b_state(const LinkDiagram& d, int n);
  /// Wall-clock seconds spent computing the entry, 0 for a missing one.
  double seconds_jones(const LinkDiagram& d, int n) const;
  double seconds_b_state(const LinkDiagram& d, int n) const;
  const EvalOptions& options() const { return opts_; }

 private:
  struct Entry {
    std::shared_future<RationalFunction> value;
    double seconds = 0;
  };
  using Key = std::pair<std::string, int>;
  RationalFunction get(std::map<Key, Entry>& table, const LinkDiagram& d, int n, bool jones);
  double seconds(const std::map<Key, Entry>& table, const LinkDiagram& d, int n) const;

  EvalOptions opts_;
  mutable std::mutex mutex_;
  std::map<Key, Entry> jones_;
  std::map<Key, Entry> b_states_;
};

/// J~_n against alpha(s_-) <Upsilon^(n)(s_-)> over 4n lowest exponents.
bool verify_theorem_1(const LinkDiagram& d, int n, InvariantCache& cache);
/// <Upsilon^(n+1)(s_-)> against J~_n over 4n lowest exponents.
bool verify_theorem_2(const LinkDiagram& d, int n, InvariantCache& cache);
/// J~_(n+1) against J~_n over 4n lowest exponents.
bool verify_corollary(const LinkDiagram& d, int n, InvariantCache& cache);

/// Lowest coefficients of J~_(n_max), certified over 4(n_max - 1) entries by
/// the chain J~_n vs J~_(n+1). Throws DomainError for non-alternating input
/// or n_max < 2, VerificationError when a link of the chain fails.
CoefficientPrefix tail_prefix(const LinkDiagram& d, int n_max, InvariantCache& cache);
/// Same at the highest end, computed as the tail of the mirror image.
CoefficientPrefix head_prefix(const LinkDiagram& d, int n_max, InvariantCache& cache);

struct StabilityEntry {
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;
  int coefficient_count = 0;
  bool jones_vs_b_state = false;       // J~_n vs alpha Upsilon^(n)(s_-)
  bool next_b_state_vs_jones = false;  // Upsilon^(n+1)(s_-) vs J~_n
  bool next_jones_vs_jones = false;    // J~_(n+1) vs J~_n
  double seconds_jones = 0;
  double seconds_b_state = 0;
  bool pass() const { return jones_vs_b_state && next_b_state_vs_jones && next_jones_vs_jones; }
};

struct StabilityReport {
  std::string link;
  std::vector<StabilityEntry> entries;
  /// Tail of J~_(n_max + 1), present when every stability check passed.
  std::optional<CoefficientPrefix> tail;

  bool pass() const;
  /// First failing check as "link: check at n = k", empty if none.
  std::string first_failure() const;
  nlohmann::json to_json(bool timings = false) const;
  static std::string csv_header(bool timings = false);
  std::string to_csv_rows(bool timings = false) const;
};

/// All three checks for n = 1..n_max. Throws DomainError for non-alternating input.
StabilityReport stability_report(const LinkDiagram& d, int n_max, InvariantCache& cache);

}  // namespace skeinlab
