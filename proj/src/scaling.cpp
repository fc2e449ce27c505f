#include "tck/scaling.hpp"

#include "tck/error.hpp"
#include "tck/prime_support.hpp"

namespace tck {

ScalingAutomorphism::ScalingAutomorphism(std::vector<Rational> scalars) : scalars_(std::move(scalars)) {
  for (std::size_t i = 0; i < scalars_.size(); ++i)
    if (scalars_[i].is_zero())
      throw DomainError("scaling factor for T" + std::to_string(i + 1) + " is zero");
}

ScalingAutomorphism ScalingAutomorphism::identity(std::size_t num_vars) {
  return ScalingAutomorphism(std::vector<Rational>(num_vars, Rational(1)));
}

bool ScalingAutomorphism::is_identity() const {
  for (const auto& c : scalars_)
    if (!c.is_one()) return false;
  return true;
}

Rational ScalingAutomorphism::character(const Exponents& e) const {
  Rational out(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (i >= scalars_.size()) throw PreconditionError("monomial uses a variable the scaling does not act on");
    out *= scalars_[i].pow(e[i]);
  }
  return out;
}

Polynomial ScalingAutomorphism::apply(const Polynomial& p) const {
  if (p.num_vars() > scalars_.size())
    throw PreconditionError("polynomial has more variables than the scaling");
  Polynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) out += Polynomial::monomial(c * character(e), e);
  return out;
}

RationalFunction ScalingAutomorphism::apply(const RationalFunction& f) const {
  return RationalFunction(apply(f.numerator()), apply(f.denominator()));
}

ScalingAutomorphism ScalingAutomorphism::compose(const ScalingAutomorphism& other) const {
  std::size_t n = std::max(num_vars(), other.num_vars());
  std::vector<Rational> s(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < num_vars()) s[i] *= scalars_[i];
    if (i < other.num_vars()) s[i] *= other.scalars_[i];
  }
  return ScalingAutomorphism(std::move(s));
}

ScalingAutomorphism ScalingAutomorphism::inverse() const { return power(-1); }

ScalingAutomorphism ScalingAutomorphism::power(long exponent) const {
  std::vector<Rational> s;
  s.reserve(scalars_.size());
  for (const auto& c : scalars_) s.push_back(c.pow(exponent));
  return ScalingAutomorphism(std::move(s));
}

RationalFunction apply_scaling(const ScalingAutomorphism& delta, const RationalFunction& f) {
  return delta.apply(f);
}

std::optional<Rational> eigencharacter(const ScalingAutomorphism& delta, const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("eigencharacter of the zero function is undefined");
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  // Scaling keeps the monomial support, so comparing leading terms of
  // delta(num)*den and lambda*num*delta(den) pins lambda down.
  Rational lambda = delta.character(num.leading_exponents()) / delta.character(den.leading_exponents());
  if (delta.apply(num) * den == (num * delta.apply(den)) * lambda) return lambda;
  return std::nullopt;
}

std::size_t lemma2_bound_check(const ScalingAutomorphism& delta, const Rational& alpha,
                               const std::vector<Lemma2Pair>& pairs) {
  std::vector<PrimeSupport> supports;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, z] = pairs[i];
    std::string where = "pair " + std::to_string(i + 1);
    if (a.is_zero()) throw PreconditionError(where + ": a_i is zero");
    PrimeSupport s = nu(a);
    if (s.empty()) throw PreconditionError(where + ": a_i = " + a.to_string() + " has empty prime support");
    for (std::size_t j = 0; j < supports.size(); ++j)
      if (supports[j].intersects(s))
        throw PreconditionError(where + ": prime support meets that of pair " + std::to_string(j + 1));
    supports.push_back(std::move(s));
    if (z.is_zero()) continue;
    if (z.num_vars() > delta.num_vars())
      throw PreconditionError(where + ": z_i uses more variables than delta acts on");
    auto lambda = eigencharacter(delta, z);
    if (!lambda || *lambda != alpha * a)
      throw PreconditionError(where + ": z_i is not an eigenvector with eigencharacter alpha*a_i");
    ++nonzero;
  }
  if (nonzero > delta.num_vars() + 1)
    throw ConsistencyError("family of " + std::to_string(nonzero) + " nonzero elements exceeds bound " +
                           std::to_string(delta.num_vars() + 1));
  return nonzero;
}

}  // namespace tck
