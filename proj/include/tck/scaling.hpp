#pragma once

#include <optional>
#include <vector>

#include "tck/rational_function.hpp"

namespace tck {

// Field automorphism of Q(T1..Tk) given by T_i -> c_i * T_i.
class ScalingAutomorphism {
public:
  ScalingAutomorphism() = default;
  explicit ScalingAutomorphism(std::vector<Rational> scalars);

  static ScalingAutomorphism identity(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return scalars_.size(); }
  const std::vector<Rational>& scalars() const noexcept { return scalars_; }
  bool is_identity() const;

  // prod c_i^{e_i}; exponents beyond num_vars() must be zero.
  Rational character(const Exponents& e) const;

  Polynomial apply(const Polynomial& p) const;
  RationalFunction apply(const RationalFunction& f) const;
  const Rational& apply(const Rational& x) const { return x; }

  // (a.compose(b))(f) = a(b(f)); scalings commute, so order is immaterial.
  ScalingAutomorphism compose(const ScalingAutomorphism& other) const;
  ScalingAutomorphism inverse() const;
  ScalingAutomorphism power(long exponent) const;

  friend bool operator==(const ScalingAutomorphism&, const ScalingAutomorphism&) = default;

private:
  std::vector<Rational> scalars_;
};

RationalFunction apply_scaling(const ScalingAutomorphism& delta, const RationalFunction& f);

// lambda with delta(f) = lambda * f, if f is an eigenvector.
std::optional<Rational> eigencharacter(const ScalingAutomorphism& delta, const RationalFunction& f);

struct Lemma2Pair {
  Rational a;
  RationalFunction z;
};

// Checks delta(z_i) = alpha * a_i * z_i with a_i != +-1 and pairwise disjoint
// prime supports, then returns how many z_i are nonzero. Such a family has at
// most k + 1 nonzero members; exceeding that raises ConsistencyError.
std::size_t lemma2_bound_check(const ScalingAutomorphism& delta, const Rational& alpha,
                               const std::vector<Lemma2Pair>& pairs);

}  // namespace tck
