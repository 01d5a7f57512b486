#include "skeinlab/tails.hpp"

#include <chrono>

#include "skeinlab/colored_states.hpp"
#include "skeinlab/errors.hpp"

namespace skeinlab {

std::string to_string(End e) { return e == End::Lowest ? "lowest" : "highest"; }

std::vector<Integer> end_coefficients(const RationalFunction& f, int count, End end) {
  if (f.is_zero()) throw DomainError("coefficients of zero are undefined");
  return lowest_coefficients(end == End::Lowest ? f : mirror_substitute(f), count);
}

bool doteq(const RationalFunction& p, const RationalFunction& q, int span, End end) {
  if (p.is_zero() || q.is_zero()) throw DomainError("doteq needs nonzero arguments");
  if (span < 1) throw DomainError("doteq needs a positive span");
  const std::vector<Integer> u = end_coefficients(p, span, end);
  const std::vector<Integer> v = end_coefficients(q, span, end);
  if (u == v) return true;
  for (int i = 0; i < span; ++i)
    if (u[i] != -v[i]) return false;
  return true;
}

bool doteq(const LaurentPolynomial& p, const LaurentPolynomial& q, int span, End end) {
  return doteq(RationalFunction(p), RationalFunction(q), span, end);
}

std::vector<Integer> CoefficientPrefix::certified() const {
  return {coefficients.begin(), coefficients.begin() + std::min<std::size_t>(certified_length, coefficients.size())};
}

nlohmann::json CoefficientPrefix::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coefficients) coeffs.push_back(nlohmann::json::parse(c.get_str()));
  return {{"source", source}, {"end", to_string(end)}, {"certified_length", certified_length}, {"coefficients", coeffs}};
}

// ---------------------------------------------------------------------------

RationalFunction InvariantCache::get(std::map<Key, Entry>& table, const LinkDiagram& d, int n, bool jones) {
  Key key{to_pd_string(d), n};
  std::promise<RationalFunction> promise;
  std::unique_lock lock(mutex_);
  if (auto it = table.find(key); it != table.end()) {
    auto future = it->second.value;
    lock.unlock();
    return future.get();
  }
  table.emplace(key, Entry{promise.get_future().share(), 0});
  lock.unlock();
  const auto start = std::chrono::steady_clock::now();
  try {
    RationalFunction value = jones ? RationalFunction(skeinlab::colored_jones(d, n, opts_))
                                   : evaluate_rational(build_upsilon(d, n, ColoredState::all_minus(d.crossing_count(), n)), opts_);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    lock.lock();
    table[key].seconds = secs;
    lock.unlock();
    promise.set_value(value);
    return value;
  } catch (...) {
    promise.set_exception(std::current_exception());
    throw;
  }
}

double InvariantCache::seconds(const std::map<Key, Entry>& table, const LinkDiagram& d, int n) const {
  std::lock_guard lock(mutex_);
  auto it = table.find({to_pd_string(d), n});
  return it == table.end() ? 0.0 : it->second.seconds;
}

LaurentPolynomial InvariantCache::colored_jones(const LinkDiagram& d, int n) {
  return get(jones_, d, n, true).to_laurent();
}

RationalFunction InvariantCache::b_state(const LinkDiagram& d, int n) { return get(b_states_, d, n, false); }

double InvariantCache::seconds_jones(const LinkDiagram& d, int n) const { return seconds(jones_, d, n); }
double InvariantCache::seconds_b_state(const LinkDiagram& d, int n) const { return seconds(b_states_, d, n); }

// ---------------------------------------------------------------------------

namespace {

void require_alternating(const LinkDiagram& d) {
  if (!is_alternating(d)) throw DomainError("diagram is not alternating: " + (d.name().empty() ? to_pd_string(d) : d.name()));
}

std::string label(const LinkDiagram& d) { return d.name().empty() ? to_pd_string(d) : d.name(); }

}  // namespace

bool verify_theorem_1(const LinkDiagram& d, int n, InvariantCache& cache) {
  require_alternating(d);
  const RationalFunction b = RationalFunction(alpha(d, n, ColoredState::all_minus(d.crossing_count(), n))) * cache.b_state(d, n);
  return doteq(RationalFunction(cache.colored_jones(d, n)), b, 4 * n);
}

bool verify_theorem_2(const LinkDiagram& d, int n, InvariantCache& cache) {
  require_alternating(d);
  return doteq(cache.b_state(d, n + 1), RationalFunction(cache.colored_jones(d, n)), 4 * n);
}

bool verify_corollary(const LinkDiagram& d, int n, InvariantCache& cache) {
  require_alternating(d);
  return doteq(cache.colored_jones(d, n + 1), cache.colored_jones(d, n), 4 * n);
}

CoefficientPrefix tail_prefix(const LinkDiagram& d, int n_max, InvariantCache& cache) {
  require_alternating(d);
  if (n_max < 2) throw DomainError("tail prefix needs n_max >= 2");
  for (int n = 1; n < n_max; ++n)
    if (!verify_corollary(d, n, cache))
      throw VerificationError("tail chain fails for " + label(d) + " between n = " + std::to_string(n) +
                              " and n = " + std::to_string(n + 1));
  const LaurentPolynomial j = cache.colored_jones(d, n_max);
  CoefficientPrefix out;
  out.source = label(d) + " n=" + std::to_string(n_max);
  out.end = End::Lowest;
  out.coefficients = end_coefficients(RationalFunction(j), j.max_degree() - j.min_degree() + 1, End::Lowest);
  if (out.coefficients.front() < 0)
    for (auto& c : out.coefficients) c = -c;
  out.certified_length = 4 * (n_max - 1);
  return out;
}

CoefficientPrefix head_prefix(const LinkDiagram& d, int n_max, InvariantCache& cache) {
  LinkDiagram m = mirror(d);
  m.set_name(d.name());
  CoefficientPrefix out = tail_prefix(m, n_max, cache);
  out.end = End::Highest;
  return out;
}

// ---------------------------------------------------------------------------

bool StabilityReport::pass() const {
  for (const auto& e : entries)
    if (!e.pass()) return false;
  return true;
}

std::string StabilityReport::first_failure() const {
  for (const auto& e : entries) {
    const std::string at = " at n = " + std::to_string(e.n);
    if (!e.jones_vs_b_state) return link + ": jones_vs_b_state" + at;
    if (!e.next_b_state_vs_jones) return link + ": next_b_state_vs_jones" + at;
    if (!e.next_jones_vs_jones) return link + ": next_jones_vs_jones" + at;
  }
  return {};
}

nlohmann::json StabilityReport::to_json(bool timings) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json r{{"n", e.n},
                     {"span", 4 * e.n},
                     {"min_degree", e.min_degree},
                     {"max_degree", e.max_degree},
                     {"coefficient_count", e.coefficient_count},
                     {"jones_vs_b_state", e.jones_vs_b_state},
                     {"next_b_state_vs_jones", e.next_b_state_vs_jones},
                     {"next_jones_vs_jones", e.next_jones_vs_jones}};
    if (timings) r["seconds"] = {{"jones", e.seconds_jones}, {"b_state", e.seconds_b_state}};
    rows.push_back(std::move(r));
  }
  nlohmann::json j{{"link", link}, {"pass", pass()}, {"entries", rows}, {"span_convention", "consecutive exponents, zeros counted"}};
  j["tail"] = tail ? tail->to_json() : nlohmann::json(nullptr);
  return j;
}

std::string StabilityReport::csv_header(bool timings) {
  std::string h = "link,n,min_degree,max_degree,coefficient_count,jones_vs_b_state,next_b_state_vs_jones,next_jones_vs_jones";
  if (timings) h += ",seconds_jones,seconds_b_state";
  return h;
}

std::string StabilityReport::to_csv_rows(bool timings) const {
  std::string out;
  auto b = [](bool v) { return v ? std::string("true") : std::string("false"); };
  for (const auto& e : entries) {
    out += link + "," + std::to_string(e.n) + "," + std::to_string(e.min_degree) + "," + std::to_string(e.max_degree) + "," +
           std::to_string(e.coefficient_count) + "," + b(e.jones_vs_b_state) + "," + b(e.next_b_state_vs_jones) + "," +
           b(e.next_jones_vs_jones);
    if (timings) out += "," + std::to_string(e.seconds_jones) + "," + std::to_string(e.seconds_b_state);
    out += "\n";
  }
  return out;
}

StabilityReport stability_report(const LinkDiagram& d, int n_max, InvariantCache& cache) {
  require_alternating(d);
  if (n_max < 1) throw DomainError("stability report needs n_max >= 1");
  StabilityReport report;
  report.link = label(d);
  for (int n = 1; n <= n_max; ++n) {
    StabilityEntry e;
    e.n = n;
    const LaurentPolynomial j = cache.colored_jones(d, n);
    e.min_degree = j.min_degree();
    e.max_degree = j.max_degree();
    e.coefficient_count = static_cast<int>(j.term_count());
    e.jones_vs_b_state = verify_theorem_1(d, n, cache);
    e.next_b_state_vs_jones = verify_theorem_2(d, n, cache);
    e.next_jones_vs_jones = verify_corollary(d, n, cache);
    e.seconds_jones = cache.seconds_jones(d, n);
    e.seconds_b_state = cache.seconds_b_state(d, n);
    report.entries.push_back(e);
  }
  if (report.pass()) report.tail = tail_prefix(d, n_max + 1, cache);
  return report;
}

}  // namespace skeinlab
