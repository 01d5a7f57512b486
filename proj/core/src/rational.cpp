#include "skeinlab/rational.hpp"

#include "skeinlab/errors.hpp"

namespace skeinlab {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::normalize_unit_denominator() {
  // den_ is a nonzero monomial c*A^k here
  const int s = den_.min_degree();
  if (den_.lowest_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial(1);
    return;
  }
  if (!den_.is_monomial() || !den_.is_unit()) {
    LaurentPolynomial g = gcd(num_, den_);
    if (!(g == LaurentPolynomial(1))) {
      auto n = divide_exact(num_, g);
      auto d = divide_exact(den_, g);
      if (!n || !d) throw InternalError("gcd does not divide its arguments");
      num_ = std::move(*n);
      den_ = std::move(*d);
    }
  }
  const int s = den_.min_degree();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  if (den_.highest_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentPolynomial RationalFunction::to_laurent() const {
  if (!den_.is_unit()) throw InternalError("rational function does not demote to a Laurent polynomial: " + to_string());
  return den_.lowest_coefficient() == 1 ? num_ : -num_;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPolynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int min_degree(const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("degree of zero undefined");
  return f.numerator().min_degree() - f.denominator().min_degree();
}

RationalFunction mirror_substitute(const RationalFunction& f) {
  return RationalFunction(f.numerator().mirrored(), f.denominator().mirrored());
}

std::vector<Integer> lowest_coefficients(const RationalFunction& f, int count) {
  std::vector<Integer> out;
  if (count <= 0) return out;
  if (f.is_zero()) throw DomainError("degree of zero undefined");
  const LaurentPolynomial& p = f.numerator();
  const LaurentPolynomial& q = f.denominator();
  const int p0 = p.min_degree();
  const int q0 = q.min_degree();
  auto pc = [&](int i) { return p.coefficient(p0 + i); };
  std::vector<Integer> qc;
  for (int i = 0; i < count; ++i) qc.push_back(q.coefficient(q0 + i));
  const Integer& lead = qc[0];
  for (int i = 0; i < count; ++i) {
    Integer acc = pc(i);
    for (int j = 1; j <= i; ++j)
      if (qc[j] != 0) acc -= qc[j] * out[i - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
      throw DomainError("expansion coefficients are not integral");
    Integer c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace skeinlab
