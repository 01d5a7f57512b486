#include "skeinlab/temperley_lieb.hpp"

#include <memory>
#include <mutex>

#include "skeinlab/errors.hpp"
#include "skeinlab/quantum.hpp"

namespace skeinlab {

namespace {

// Position of a point when walking the boundary: bottom left-to-right then top right-to-left.
int circle_position(int n, int point) { return point < n ? point : 3 * n - 1 - point; }

bool non_crossing(int n, const std::vector<std::uint8_t>& partners) {
  std::vector<int> at(2 * n);
  for (int p = 0; p < 2 * n; ++p) at[circle_position(n, p)] = p;
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n; ++pos) {
    const int p = at[pos];
    const int q = partners[p];
    if (circle_position(n, q) > pos) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

void enumerate_words(int n, int open, int closed, std::string& word, std::vector<std::string>& out) {
  if (open == n && closed == n) {
    out.push_back(word);
    return;
  }
  if (open < n) {
    word.push_back('(');
    enumerate_words(n, open + 1, closed, word, out);
    word.pop_back();
  }
  if (closed < open) {
    word.push_back(')');
    enumerate_words(n, open, closed + 1, word, out);
    word.pop_back();
  }
}

// lcm of the denominators and the matching numerators over it
struct Integral {
  LaurentPolynomial denominator{1};
  std::vector<std::pair<PlanarMatching, LaurentPolynomial>> numerators;
};

LaurentPolynomial lcm(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto q = divide_exact(a * b, gcd(a, b));
  if (!q) throw InternalError("lcm division failed");
  return *q;
}

Integral integral_form(const TLElement& x) {
  Integral r;
  for (const auto& [m, c] : x.terms()) r.denominator = lcm(r.denominator, c.denominator());
  for (const auto& [m, c] : x.terms()) {
    auto scale = divide_exact(r.denominator, c.denominator());
    if (!scale) throw InternalError("lcm is not a common multiple");
    r.numerators.emplace_back(m, c.numerator() * *scale);
  }
  return r;
}

const LaurentPolynomial& loop_power(int k) {
  static std::mutex mutex;
  static std::vector<LaurentPolynomial> powers{LaurentPolynomial(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * loop_value());
  return powers[k];
}

using NumeratorMap = std::map<PlanarMatching, LaurentPolynomial>;

NumeratorMap multiply_numerators(const std::vector<std::pair<PlanarMatching, LaurentPolynomial>>& x,
                                 const std::vector<std::pair<PlanarMatching, LaurentPolynomial>>& y) {
  NumeratorMap out;
  for (const auto& [a, pa] : x)
    for (const auto& [b, pb] : y) {
      Composition c = compose(a, b);
      out[c.matching] += pa * pb * loop_power(c.loops);
    }
  return out;
}

}  // namespace

PlanarMatching PlanarMatching::identity(int n) {
  PlanarMatching m;
  m.strands_ = n;
  m.partners_.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    m.partners_[i] = static_cast<std::uint8_t>(n + i);
    m.partners_[n + i] = static_cast<std::uint8_t>(i);
  }
  return m;
}

PlanarMatching PlanarMatching::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw DomainError("generator index out of range");
  PlanarMatching m = identity(n);
  auto& p = m.partners_;
  p[i - 1] = static_cast<std::uint8_t>(i);
  p[i] = static_cast<std::uint8_t>(i - 1);
  p[n + i - 1] = static_cast<std::uint8_t>(n + i);
  p[n + i] = static_cast<std::uint8_t>(n + i - 1);
  return m;
}

PlanarMatching PlanarMatching::from_partners(int n, std::vector<std::uint8_t> partners) {
  if (static_cast<int>(partners.size()) != 2 * n) throw DomainError("matching has wrong size");
  for (int p = 0; p < 2 * n; ++p) {
    const int q = partners[p];
    if (q >= 2 * n || q == p || partners[q] != p) throw DomainError("not a perfect matching");
  }
  if (!non_crossing(n, partners)) throw DomainError("matching is not planar");
  PlanarMatching m;
  m.strands_ = n;
  m.partners_ = std::move(partners);
  return m;
}

std::vector<PlanarMatching> PlanarMatching::enumerate(int n) {
  std::vector<std::string> words;
  std::string word;
  enumerate_words(n, 0, 0, word, words);
  std::vector<PlanarMatching> out;
  std::vector<int> at(2 * n);
  for (int p = 0; p < 2 * n; ++p) at[circle_position(n, p)] = p;
  for (const auto& w : words) {
    std::vector<std::uint8_t> partners(2 * n);
    std::vector<int> stack;
    for (int pos = 0; pos < 2 * n; ++pos) {
      if (w[pos] == '(') {
        stack.push_back(at[pos]);
      } else {
        const int p = stack.back();
        stack.pop_back();
        partners[p] = static_cast<std::uint8_t>(at[pos]);
        partners[at[pos]] = static_cast<std::uint8_t>(p);
      }
    }
    out.push_back(from_partners(n, std::move(partners)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PlanarMatching::is_identity() const { return *this == identity(strands_); }

std::string PlanarMatching::to_string() const {
  const int n = strands_;
  std::string out(2 * n, '?');
  for (int p = 0; p < 2 * n; ++p)
    out[circle_position(n, p)] = circle_position(n, p) < circle_position(n, partners_[p]) ? '(' : ')';
  return out;
}

Composition compose(const PlanarMatching& bottom, const PlanarMatching& top) {
  const int n = bottom.strands();
  if (top.strands() != n) throw DomainError("strand-count mismatch in composition");
  Composition out;
  std::vector<std::uint8_t> partners(2 * n);
  // Middle points are bottom's top j == top's bottom j.
  std::vector<char> middle_seen(n, 0);
  auto trace = [&](bool in_bottom, int point) {
    // Walk from an outer point until reaching another outer point.
    while (true) {
      if (in_bottom) {
        const int q = bottom.partner(point);
        if (q < n) return q;
        middle_seen[q - n] = 1;
        in_bottom = false;
        point = q - n;
      } else {
        const int q = top.partner(point);
        if (q >= n) return n + (q - n);
        middle_seen[q] = 1;
        in_bottom = true;
        point = n + q;
      }
    }
  };
  for (int i = 0; i < n; ++i) {
    partners[i] = static_cast<std::uint8_t>(trace(true, i));
    partners[n + i] = static_cast<std::uint8_t>(trace(false, n + i));
  }
  for (int j = 0; j < n; ++j) {
    if (middle_seen[j]) continue;
    ++out.loops;
    int point = j;  // top-matching bottom index
    while (!middle_seen[point]) {
      middle_seen[point] = 1;
      const int q = top.partner(point);      // another middle point
      const int r = bottom.partner(n + q);   // back through bottom
      middle_seen[q] = 1;
      point = r - n;
    }
  }
  out.matching = PlanarMatching::from_partners(n, std::move(partners));
  return out;
}

PlanarMatching tensor_identity(const PlanarMatching& m, int extra, bool on_right) {
  const int n = m.strands();
  const int t = n + extra;
  std::vector<std::uint8_t> partners(2 * t);
  const int off = on_right ? 0 : extra;
  auto map_point = [&](int p) { return p < n ? p + off : t + (p - n) + off; };
  for (int p = 0; p < 2 * n; ++p) partners[map_point(p)] = static_cast<std::uint8_t>(map_point(m.partner(p)));
  const int first_new = on_right ? n : 0;
  for (int i = first_new; i < first_new + extra; ++i) {
    partners[i] = static_cast<std::uint8_t>(t + i);
    partners[t + i] = static_cast<std::uint8_t>(i);
  }
  return PlanarMatching::from_partners(t, std::move(partners));
}

int closure_loops(const PlanarMatching& m) {
  const int n = m.strands();
  std::vector<char> seen(2 * n, 0);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int p = s;
    while (!seen[p]) {
      seen[p] = 1;
      const int q = m.partner(p);
      seen[q] = 1;
      p = q < n ? q + n : q - n;  // follow the closing arc
    }
  }
  return loops;
}

TLElement TLElement::identity(int n) { return basis(PlanarMatching::identity(n)); }
TLElement TLElement::generator(int n, int i) { return basis(PlanarMatching::generator(n, i)); }

TLElement TLElement::basis(const PlanarMatching& m) {
  TLElement x(m.strands());
  x.terms_.emplace(m, RationalFunction(1));
  return x;
}

RationalFunction TLElement::coefficient(const PlanarMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void TLElement::add(const PlanarMatching& m, const RationalFunction& c) {
  if (m.strands() != strands_) throw DomainError("strand-count mismatch in TL addition");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TLElement& TLElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]" + m.to_string();
  }
  return out;
}

TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands()) throw DomainError("strand-count mismatch in TL multiplication");
  TLElement out(x.strands());
  if (x.is_zero() || y.is_zero()) return out;
  Integral ix = integral_form(x);
  Integral iy = integral_form(y);
  NumeratorMap prod = multiply_numerators(ix.numerators, iy.numerators);
  const LaurentPolynomial den = ix.denominator * iy.denominator;
  for (auto& [m, p] : prod)
    if (!p.is_zero()) out.add(m, RationalFunction(std::move(p), den));
  return out;
}

TLElement tensor_identity(const TLElement& x, int extra, bool on_right) {
  TLElement out(x.strands() + extra);
  for (const auto& [m, c] : x.terms()) out.add(tensor_identity(m, extra, on_right), c);
  return out;
}

RationalFunction closure(const TLElement& x) {
  if (x.is_zero()) return {};
  Integral ix = integral_form(x);
  LaurentPolynomial total;
  for (const auto& [m, p] : ix.numerators) total += p * loop_power(closure_loops(m));
  return RationalFunction(total, ix.denominator);
}

TLElement partial_trace(const TLElement& x, int closed) {
  const int n = x.strands();
  if (closed < 0 || closed > n) throw DomainError("partial trace closes more strands than present");
  const int r = n - closed;
  TLElement out(r);
  for (const auto& [m, c] : x.terms()) {
    // Outer points: bottom 0..r-1 and top 0..r-1; the closing arcs join
    // bottom j and top j for j >= r.
    std::vector<std::uint8_t> partners(2 * r);
    std::vector<char> seen(2 * n, 0);
    auto outer = [&](int p) { return p < n ? p < r : (p - n) < r; };
    auto to_result = [&](int p) { return p < n ? p : r + (p - n); };
    for (int p = 0; p < 2 * n; ++p) {
      if (!outer(p) || seen[p]) continue;
      int cur = p;
      seen[cur] = 1;
      while (true) {
        int q = m.partner(cur);
        seen[q] = 1;
        if (outer(q)) {
          partners[to_result(p)] = static_cast<std::uint8_t>(to_result(q));
          partners[to_result(q)] = static_cast<std::uint8_t>(to_result(p));
          break;
        }
        cur = q < n ? q + n : q - n;
        seen[cur] = 1;
      }
    }
    int loops = 0;
    for (int p = 0; p < 2 * n; ++p) {
      if (seen[p]) continue;
      ++loops;
      int cur = p;
      while (!seen[cur]) {
        seen[cur] = 1;
        const int q = m.partner(cur);
        seen[q] = 1;
        cur = q < n ? q + n : q - n;
      }
    }
    out.add(PlanarMatching::from_partners(r, std::move(partners)), c * RationalFunction(loop_power(loops)));
  }
  return out;
}

namespace {

std::unique_ptr<JonesWenzl> build_jones_wenzl(int n, const JonesWenzl* previous) {
  auto jw = std::make_unique<JonesWenzl>();
  jw->n = n;
  if (n <= 1) {
    jw->element = TLElement::identity(n);
    jw->common_denominator = LaurentPolynomial(1);
    jw->numerators.emplace_back(PlanarMatching::identity(n), LaurentPolynomial(1));
    return jw;
  }
  // f(n) = X - (Delta_{n-2}/Delta_{n-1}) X e_{n-1} X with X = f(n-1) (x) 1.
  std::vector<std::pair<PlanarMatching, LaurentPolynomial>> x;
  for (const auto& [m, p] : previous->numerators) x.emplace_back(tensor_identity(m, 1), p);
  const LaurentPolynomial& q = previous->common_denominator;
  const PlanarMatching e = PlanarMatching::generator(n, n - 1);

  std::vector<std::pair<PlanarMatching, LaurentPolynomial>> xe;
  for (const auto& [m, p] : x) {
    Composition c = compose(m, e);
    xe.emplace_back(c.matching, p * loop_power(c.loops));
  }
  NumeratorMap xex = multiply_numerators(xe, x);

  const LaurentPolynomial& d1 = delta(n - 1);
  const LaurentPolynomial& d2 = delta(n - 2);
  NumeratorMap num;
  const LaurentPolynomial d1q = d1 * q;
  for (const auto& [m, p] : x) num[m] += d1q * p;
  for (const auto& [m, p] : xex) num[m] -= d2 * p;
  LaurentPolynomial den = d1 * q * q;

  LaurentPolynomial g = den;
  for (const auto& [m, p] : num) {
    if (g.is_unit()) break;
    if (!p.is_zero()) g = gcd(g, p);
  }
  for (auto& [m, p] : num) {
    if (p.is_zero()) continue;
    auto r = divide_exact(p, g);
    if (!r) throw InternalError("Jones-Wenzl gcd reduction failed");
    jw->numerators.emplace_back(m, std::move(*r));
  }
  auto rd = divide_exact(den, g);
  if (!rd) throw InternalError("Jones-Wenzl gcd reduction failed");
  jw->common_denominator = std::move(*rd);
  jw->element = TLElement(n);
  for (const auto& [m, p] : jw->numerators) jw->element.add(m, RationalFunction(p, jw->common_denominator));
  return jw;
}

}  // namespace

const JonesWenzl& jones_wenzl(int n) {
  if (n < 0) throw DomainError("Jones-Wenzl index must be nonnegative");
  static std::mutex mutex;
  static std::vector<std::unique_ptr<JonesWenzl>> table;
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    table.push_back(build_jones_wenzl(m, m > 0 ? table.back().get() : nullptr));
  }
  return *table[n];
}

bool absorption_check(int m, int n) {
  const TLElement& big = jones_wenzl(m + n).element;
  TLElement small = tensor_identity(jones_wenzl(n).element, m);
  return tl_multiply(small, big) == big;
}

}  // namespace skeinlab
