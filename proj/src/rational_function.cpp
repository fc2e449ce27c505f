#include "tck/rational_function.hpp"

#include "tck/error.hpp"

namespace tck {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Rational(1), num_.num_vars()) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

RationalFunction RationalFunction::variable(std::size_t index, std::size_t num_vars) {
  return RationalFunction(Polynomial::variable(index, num_vars));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  std::size_t n = std::max(num_.num_vars(), den_.num_vars());
  num_ = num_.with_num_vars(n);
  den_ = den_.with_num_vars(n);
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1), n);
    return;
  }
  Exponents common = num_.monomial_content();
  Exponents dm = den_.monomial_content();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = std::min(common[i], dm[i]);
    any = any || common[i] != 0;
  }
  if (any) {
    num_ = num_.divide_by_monomial(common);
    den_ = den_.divide_by_monomial(common);
  }
  Rational lead = den_.leading_coefficient();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

bool RationalFunction::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::reduced() const {
  if (is_zero()) return *this;
  Polynomial g = gcd(num_, den_);
  if (g.is_constant()) return *this;
  auto n = num_.divide_exact(g);
  auto d = den_.divide_exact(g);
  if (!n || !d) throw ConsistencyError("gcd does not divide rational function parts");
  return RationalFunction(std::move(*n), std::move(*d));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero() || other.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) { return *this *= other.inverse(); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace tck
