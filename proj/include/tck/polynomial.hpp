#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tck/rational.hpp"

namespace tck {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic with
// T1 > T2 > ... . Exponent vectors of unequal length compare as if padded.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q in T1..Tk.
//
// Stored terms never carry a zero coefficient. Binary operations between
// polynomials over different variable counts promote to the larger count,
// so constants built with zero variables mix freely with anything.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  Polynomial(const Rational& constant, std::size_t num_vars = 0);  // NOLINT

  static Polynomial variable(std::size_t index, std::size_t num_vars);
  static Polynomial monomial(const Rational& coefficient, Exponents exponents);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  // Coefficient of var^power, as a polynomial in the remaining variables.
  Polynomial coefficient_in(std::size_t var, unsigned power) const;

  Polynomial with_num_vars(std::size_t num_vars) const;

  // Componentwise minimum exponent over all terms (the monomial gcd).
  Exponents monomial_content() const;
  Polynomial divide_by_monomial(const Exponents& exponents) const;
  Polynomial times_monomial(const Exponents& exponents) const;

  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Human-readable, e.g. "3*T1^2*T2 - 1/2".
  std::string to_string() const;
  // Sparse term list, one "coef:[e1,...,ek]" string per term, leading term first.
  std::vector<std::string> to_terms() const;
  static Polynomial from_terms(const std::vector<std::string>& terms, std::size_t num_vars);

private:
  void add_term(const Exponents& e, const Rational& c);
  Exponents padded(const Exponents& e) const;

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// Greatest common divisor normalized to leading coefficient 1 (zero if both
// inputs are zero). Recursive primitive pseudo-remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace tck
