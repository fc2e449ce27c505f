#pragma once

#include <string>

#include "tck/polynomial.hpp"

namespace tck {

// Element of Q(T1..Tk) as numerator/denominator.
//
// Normal form: any common monomial factor is cancelled, and the denominator's
// graded-lex leading coefficient is 1. Numerator and denominator are not
// otherwise made coprime unless reduced() is called; equality is decided by
// cross-multiplication.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(int value) : RationalFunction(static_cast<long>(value)) {}  // NOLINT
  RationalFunction(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable(std::size_t index, std::size_t num_vars);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  std::size_t num_vars() const noexcept { return std::max(num_.num_vars(), den_.num_vars()); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  RationalFunction inverse() const;
  // Numerator and denominator divided by their full gcd.
  RationalFunction reduced() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace tck
