#include "skeinlab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

using Dense = std::vector<Integer>;  // index i holds the coefficient of x^i

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int step_of(const std::vector<LaurentPolynomial::Term>& terms, int g = 0) {
  for (std::size_t i = 1; i < terms.size(); ++i) g = std::gcd(g, terms[i].exponent - terms[0].exponent);
  return g;
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense primitive_part(Dense p) {
  Integer c = dense_content(p);
  if (c != 0 && c != 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Integer c;
  mpz_gcd(c.get_mpz_t(), dense_content(a).get_mpz_t(), dense_content(b).get_mpz_t());
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = Dense{1};
      break;
    }
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  a = primitive_part(std::move(a));
  for (auto& x : a) x *= c;
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

// Exact division of polynomials with nonzero constant terms; nullopt if d does
// not divide p.
std::optional<Dense> dense_divide_exact(Dense p, const Dense& d) {
  if (d.empty()) return std::nullopt;
  if (p.empty()) return Dense{};
  if (p.size() < d.size()) return std::nullopt;
  const std::size_t dq = p.size() - d.size();
  Dense q(dq + 1);
  const Integer& lead = d.back();
  const bool unit_lead = (lead == 1 || lead == -1);
  Integer t;
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer& top = p[k + d.size() - 1];
    if (top != 0) {
      if (unit_lead) {
        q[k] = lead == 1 ? top : Integer(-top);
      } else {
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      }
      for (std::size_t i = 0; i < d.size(); ++i)
        mpz_submul(p[k + i].get_mpz_t(), q[k].get_mpz_t(), d[i].get_mpz_t());
    }
  }
  for (const auto& x : p)
    if (x != 0) return std::nullopt;
  return q;
}

// Writes p as x^(offset) * P(A^step).
struct Compressed {
  int offset = 0;
  Dense coeffs;
};

Compressed compress(const LaurentPolynomial& p, int step) {
  Compressed c;
  c.offset = p.min_degree();
  c.coeffs.assign((p.max_degree() - c.offset) / step + 1, Integer(0));
  for (const auto& t : p.terms()) c.coeffs[(t.exponent - c.offset) / step] = t.coeff;
  return c;
}

LaurentPolynomial expand(const Dense& coeffs, int offset, int step) {
  std::vector<std::pair<int, Integer>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(offset + static_cast<int>(i) * step, coeffs[i]);
  return LaurentPolynomial::from_terms(std::move(terms));
}

std::string exponent_text(int e) { return "A^" + std::to_string(e); }

}  // namespace

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coeff, int exponent) {
  LaurentPolynomial p;
  if (coeff != 0) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<std::pair<int, Integer>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& [e, c] : terms) {
    if (!out.empty() && out.back().exponent == e) {
      out.back().coeff += c;
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({e, std::move(c)});
    }
  }
  return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::from_dense(int min_deg, const std::vector<Integer>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.push_back({min_deg + static_cast<int>(i), coeffs[i]});
  return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  // Grammar: term (('+'|'-') term)*, term := [int ['*']] ['A' ['^' int]] | int
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty polynomial text");
  if (s == "0") return {};
  std::vector<std::pair<int, Integer>> terms;
  std::size_t i = 0;
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw InputError("expected '+' or '-' in polynomial text: " + s);
    }
    std::string digits;
    read_int(digits);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    int exponent = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'A') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        std::string ed;
        read_int(ed);
        if (ed.empty()) throw InputError("missing exponent in polynomial text: " + s);
        exponent = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      throw InputError("malformed polynomial text: " + s);
    }
    terms.emplace_back(exponent, sign * coeff);
  }
  return from_terms(std::move(terms));
}

bool LaurentPolynomial::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

int LaurentPolynomial::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero undefined");
  return terms_.front().exponent;
}

int LaurentPolynomial::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero undefined");
  return terms_.back().exponent;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

const Integer& LaurentPolynomial::lowest_coefficient() const {
  if (terms_.empty()) throw DomainError("degree of zero undefined");
  return terms_.front().coeff;
}

const Integer& LaurentPolynomial::highest_coefficient() const {
  if (terms_.empty()) throw DomainError("degree of zero undefined");
  return terms_.back().coeff;
}

std::vector<Integer> LaurentPolynomial::dense_coefficients() const {
  if (terms_.empty()) return {};
  std::vector<Integer> out(max_degree() - min_degree() + 1, Integer(0));
  for (const auto& t : terms_) out[t.exponent - min_degree()] = t.coeff;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.exponent += k;
  return p;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::divided_by_integer(const Integer& c) const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw InternalError("inexact integer division of polynomial");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& q, const Integer& c, int k) {
  if (q.terms_.empty() || c == 0) return;
  if (terms_.empty()) {
    terms_ = q.terms_;
    scale(c, k);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + k)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent + k < a->exponent) {
      out.push_back({b->exponent + k, b->coeff * c});
      ++b;
    } else {
      mpz_addmul(a->coeff.get_mpz_t(), b->coeff.get_mpz_t(), c.get_mpz_t());
      if (a->coeff != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& q) {
  static const Integer one = 1;
  add_scaled(q, one, 0);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& q) {
  static const Integer minus_one = -1;
  add_scaled(q, minus_one, 0);
  return *this;
}

void LaurentPolynomial::scale(const Integer& c, int k) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) {
    t.exponent += k;
    if (c != 1) t.coeff *= c;
  }
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& c) {
  scale(c, 0);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& q) {
  *this = *this * q;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.is_monomial()) {
    LaurentPolynomial r = q;
    r.scale(p.terms_[0].coeff, p.terms_[0].exponent);
    return r;
  }
  if (q.is_monomial()) {
    LaurentPolynomial r = p;
    r.scale(q.terms_[0].coeff, q.terms_[0].exponent);
    return r;
  }
  // Exponents of both factors lie on a lattice of spacing g; accumulate the
  // product densely on that lattice.
  int g = step_of(q.terms_, step_of(p.terms_));
  const int lo = p.terms_.front().exponent + q.terms_.front().exponent;
  const int hi = p.terms_.back().exponent + q.terms_.back().exponent;
  std::vector<Integer> acc((hi - lo) / g + 1);
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_)
      mpz_addmul(acc[(a.exponent + b.exponent - lo) / g].get_mpz_t(), a.coeff.get_mpz_t(),
                 b.coeff.get_mpz_t());
  std::vector<LaurentPolynomial::Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.push_back({lo + static_cast<int>(i) * g, std::move(acc[i])});
  return LaurentPolynomial(std::move(out));
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.exponent == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += exponent_text(t.exponent);
    }
  }
  return out;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p, const LaurentPolynomial& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPolynomial{};
  if (d.is_monomial()) {
    const Integer& c = d.terms().front().coeff;
    for (const auto& t : p.terms())
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return p.divided_by_integer(c).shifted(-d.min_degree());
  }
  int g = std::gcd(step_of(p.terms()), step_of(d.terms()));
  if (g == 0) g = 1;
  Compressed cp = compress(p, g);
  Compressed cd = compress(d, g);
  auto q = dense_divide_exact(std::move(cp.coeffs), cd.coeffs);
  if (!q) return std::nullopt;
  return expand(*q, cp.offset - cd.offset, g);
}

LaurentPolynomial gcd(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() && q.is_zero()) return {};
  if (p.is_zero()) return gcd(q, q);
  if (q.is_zero()) return gcd(p, p);
  int g = std::gcd(step_of(p.terms()), step_of(q.terms()));
  if (g == 0) {
    // both monomials
    Integer c;
    mpz_gcd(c.get_mpz_t(), p.lowest_coefficient().get_mpz_t(), q.lowest_coefficient().get_mpz_t());
    return LaurentPolynomial::monomial(c, 0);
  }
  Compressed cp = compress(p, g);
  Compressed cq = compress(q, g);
  Dense r = dense_gcd(std::move(cp.coeffs), std::move(cq.coeffs));
  return expand(r, 0, g);
}

nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.dense_coefficients()) {
    if (c.fits_slong_p())
      coeffs.push_back(c.get_si());
    else
      coeffs.push_back(c.get_str());
  }
  return {{"minDeg", p.is_zero() ? 0 : p.min_degree()}, {"coeffs", coeffs}};
}

LaurentPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("minDeg") || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("polynomial JSON must be {\"minDeg\": d, \"coeffs\": [...]}");
  const int min_deg = j["minDeg"].get<int>();
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer())
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    else if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      throw InputError("polynomial coefficient must be an integer or decimal string");
  }
  return LaurentPolynomial::from_dense(min_deg, coeffs);
}

}  // namespace skeinlab
