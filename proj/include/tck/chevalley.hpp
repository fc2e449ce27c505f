#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tck/matrix.hpp"
#include "tck/rational_function.hpp"
#include "tck/root_system.hpp"
#include "tck/scaling.hpp"

namespace tck {

// Basis permutation with signs: basis vector j maps to sign[j] * b_{target[j]}.
struct SignedPermutation {
  std::vector<std::size_t> target;
  std::vector<int> sign;

  SignedPermutation compose(const SignedPermutation& after) const;  // after o this
  bool is_identity() const;

  // P x P^{-1}
  template <class T>
  Matrix<T> conjugate(const Matrix<T>& x) const {
    Matrix<T> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        const T& v = x(i, j);
        if (is_zero(v)) continue;
        out(target[i], target[j]) = sign[i] * sign[j] > 0 ? v : T(0) - v;
      }
    return out;
  }

  template <class T>
  Matrix<T> matrix() const {
    Matrix<T> p(target.size(), target.size());
    for (std::size_t j = 0; j < target.size(); ++j) p(target[j], j) = T(sign[j]);
    return p;
  }
};

// Adjoint representation of the Chevalley basis: e_alpha in root order,
// then h_1..h_l.
class AdjointRepresentation {
public:
  explicit AdjointRepresentation(const RootSystemType& type);
  explicit AdjointRepresentation(RootSystem rs);

  const RootSystem& root_system() const noexcept { return rs_; }
  const ChevalleyBasisData& constants() const noexcept { return constants_; }
  std::size_t dimension() const noexcept { return rs_.dimension(); }
  std::size_t cartan_index(int simple) const { return rs_.size() + static_cast<std::size_t>(simple); }

  // Structure constants of the basis: [b_a, b_b] as a coefficient vector.
  std::vector<Rational> bracket_basis(std::size_t a, std::size_t b) const;
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  const Matrix<Rational>& ad(std::size_t basis) const { return ad_.at(basis); }
  // (ad e_alpha)^k / k! for k = 1, 2, ... until the power vanishes.
  const std::vector<Matrix<Rational>>& exp_terms(std::size_t root) const { return exp_.at(root); }

  // Lie algebra automorphism e_a -> eps_a e_{rho a}, h_i -> h_{rho i}.
  const SignedPermutation& graph_automorphism(const DiagramSymmetry& rho) const;
  const std::vector<DiagramSymmetry>& symmetries() const noexcept { return symmetries_; }
  // eps_alpha of the graph automorphism for rho.
  int graph_sign(const DiagramSymmetry& rho, std::size_t root) const;

private:
  void init();
  SignedPermutation build_graph(const DiagramSymmetry& rho) const;

  RootSystem rs_;
  ChevalleyBasisData constants_;
  std::vector<Matrix<Rational>> ad_;
  std::vector<std::vector<Matrix<Rational>>> exp_;
  std::vector<DiagramSymmetry> symmetries_;
  std::vector<SignedPermutation> graphs_;
};

inline Rational lift_scalar(const Rational& x, const Rational*) { return x; }
inline RationalFunction lift_scalar(const Rational& x, const RationalFunction*) { return RationalFunction(x); }

template <class T>
Matrix<T> lift_matrix(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return lift_scalar(x, static_cast<const T*>(nullptr)); });
}

// exp(t ad e_alpha); the series terminates.
template <class T>
Matrix<T> x_alpha(const AdjointRepresentation& rep, std::size_t root, const T& t) {
  if (root >= rep.root_system().size()) throw DomainError("x_alpha requires a root index");
  Matrix<T> out = Matrix<T>::identity(rep.dimension());
  if (is_zero(t)) return out;
  T power = t;
  for (const auto& term : rep.exp_terms(root)) {
    for (std::size_t i = 0; i < term.rows(); ++i)
      for (std::size_t j = 0; j < term.cols(); ++j)
        if (!term(i, j).is_zero()) out(i, j) += lift_scalar(term(i, j), static_cast<const T*>(nullptr)) * power;
    power = power * t;
  }
  return out;
}

template <class T>
Matrix<T> n_alpha(const AdjointRepresentation& rep, std::size_t root, const T& t) {
  if (is_zero(t)) throw DomainError("n_alpha requires t != 0");
  std::size_t neg = rep.root_system().negative_of(root);
  Matrix<T> x = x_alpha(rep, root, t);
  return x * x_alpha(rep, neg, T(0) - T(1) / t) * x;
}

template <class T>
Matrix<T> h_alpha(const AdjointRepresentation& rep, std::size_t root, const T& t) {
  if (is_zero(t)) throw DomainError("h_alpha requires t != 0");
  return n_alpha(rep, root, t) * n_alpha(rep, root, T(-1));
}

inline const Rational& apply_field(const ScalingAutomorphism&, const Rational& x) { return x; }
RationalFunction apply_field(const ScalingAutomorphism& delta, const RationalFunction& x);

// phi = rho-bar delta-bar phi_h phi_g, applied right to left.
template <class T>
struct ChevalleyAutomorphism {
  std::optional<Matrix<T>> inner;
  std::optional<std::vector<T>> diagonal;
  DiagramSymmetry graph;  // empty means identity
  ScalingAutomorphism field;

  bool graph_field_only() const { return !inner && !diagonal; }
};

template <class T>
Matrix<T> apply_graph(const AdjointRepresentation& rep, const DiagramSymmetry& rho, const Matrix<T>& x) {
  if (rho.perm.empty() || rho.is_identity()) return x;
  return rep.graph_automorphism(rho).conjugate(x);
}

template <class T>
Matrix<T> apply_automorphism(const AdjointRepresentation& rep, const ChevalleyAutomorphism<T>& phi,
                             const Matrix<T>& x) {
  if (x.rows() != rep.dimension() || x.cols() != rep.dimension())
    throw DomainError("matrix dimension does not match the adjoint representation");
  Matrix<T> y = x;
  if (phi.inner) y = (*phi.inner) * y * phi.inner->inverse();
  if (phi.diagonal) {
    const auto& h = *phi.diagonal;
    if (h.size() != rep.dimension()) throw DomainError("diagonal automorphism has wrong length");
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j)
        if (!is_zero(y(i, j))) y(i, j) = y(i, j) * h[i] / h[j];
  }
  if (!phi.field.is_identity()) y = y.map([&](const T& v) { return T(apply_field(phi.field, v)); });
  return apply_graph(rep, phi.graph, y);
}

struct CommutatorFactor {
  int i = 0;  // coefficient of alpha
  int j = 0;  // coefficient of beta
  std::size_t root = 0;
  Rational constant;  // C_{ij}
};

// Factors of x_b(u)^-1 x_a(t)^-1 x_b(u) x_a(t) = prod x_{ia+jb}(C_ij (-t)^i u^j),
// ordered by i + j.
std::vector<CommutatorFactor> commutator_factors(const AdjointRepresentation& rep, std::size_t alpha,
                                                 std::size_t beta);

template <class T>
bool commutator_relation_check(const AdjointRepresentation& rep, std::size_t alpha, std::size_t beta,
                               const T& t, const T& u) {
  const RootSystem& rs = rep.root_system();
  if (alpha == beta || rs.negative_of(alpha) == beta)
    throw DomainError("commutator_relation_check requires alpha != +-beta");
  Matrix<T> xa = x_alpha(rep, alpha, t);
  Matrix<T> xb = x_alpha(rep, beta, u);
  Matrix<T> lhs = x_alpha(rep, beta, T(0) - u) * x_alpha(rep, alpha, T(0) - t) * xb * xa;
  Matrix<T> rhs = Matrix<T>::identity(rep.dimension());
  T mt = T(0) - t;
  for (const auto& f : commutator_factors(rep, alpha, beta)) {
    T coef = lift_scalar(f.constant, static_cast<const T*>(nullptr));
    for (int k = 0; k < f.i; ++k) coef = coef * mt;
    for (int k = 0; k < f.j; ++k) coef = coef * u;
    rhs = rhs * x_alpha(rep, f.root, coef);
  }
  return lhs == rhs;
}

// Square matrix over Z/modulus, row-major, entries in [0, modulus).
struct ModMatrix {
  std::size_t n = 0;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> entries;
};

ModMatrix reduce_mod_p(const Matrix<Rational>& x, std::uint32_t p);

}  // namespace tck
