#include "tck/chevalley.hpp"

#include <gmpxx.h>

#include "tck/prime_support.hpp"

namespace tck {

SignedPermutation SignedPermutation::compose(const SignedPermutation& after) const {
  SignedPermutation out;
  out.target.resize(target.size());
  out.sign.resize(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) {
    out.target[j] = after.target[target[j]];
    out.sign[j] = sign[j] * after.sign[target[j]];
  }
  return out;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t j = 0; j < target.size(); ++j)
    if (target[j] != j || sign[j] != 1) return false;
  return true;
}

AdjointRepresentation::AdjointRepresentation(const RootSystemType& type)
    : AdjointRepresentation(RootSystem::build(type)) {}

AdjointRepresentation::AdjointRepresentation(RootSystem rs)
    : rs_(std::move(rs)), constants_(ChevalleyBasisData::build(rs_)) {
  init();
}

std::vector<Rational> AdjointRepresentation::bracket_basis(std::size_t a, std::size_t b) const {
  std::size_t dim = dimension();
  std::size_t nroots = rs_.size();
  std::vector<Rational> out(dim, Rational(0));
  bool ea = a < nroots, eb = b < nroots;
  if (ea && eb) {
    if (rs_.negative_of(a) == b) {
      std::vector<int> c = rs_.coroot(a);
      for (std::size_t i = 0; i < c.size(); ++i) out[nroots + i] = Rational(c[i]);
    } else {
      long s = rs_.sum_index(a, b);
      if (s >= 0) out[static_cast<std::size_t>(s)] = Rational(constants_.n(a, b));
    }
  } else if (ea) {
    int simple = static_cast<int>(b - nroots);
    out[a] = Rational(-rs_.cartan_integer(a, static_cast<std::size_t>(simple)));
  } else if (eb) {
    int simple = static_cast<int>(a - nroots);
    out[b] = Rational(rs_.cartan_integer(b, static_cast<std::size_t>(simple)));
  }
  return out;
}

std::vector<Rational> AdjointRepresentation::bracket(const std::vector<Rational>& x,
                                                     const std::vector<Rational>& y) const {
  std::size_t dim = dimension();
  std::vector<Rational> out(dim, Rational(0));
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    const Matrix<Rational>& m = ad_[a];
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (!m(i, j).is_zero() && !y[j].is_zero()) out[i] += x[a] * m(i, j) * y[j];
  }
  return out;
}

void AdjointRepresentation::init() {
  std::size_t dim = dimension();
  ad_.clear();
  for (std::size_t a = 0; a < dim; ++a) {
    Matrix<Rational> m(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      std::vector<Rational> col = bracket_basis(a, b);
      for (std::size_t i = 0; i < dim; ++i) m(i, b) = col[i];
    }
    ad_.push_back(std::move(m));
  }
  exp_.assign(rs_.size(), {});
  for (std::size_t r = 0; r < rs_.size(); ++r) {
    Matrix<Rational> term = ad_[r];
    int k = 1;
    while (!term.is_zero()) {
      exp_[r].push_back(term);
      ++k;
      term = term * ad_[r];
      term *= Rational(1) / Rational(k);
      if (k > static_cast<int>(dim) + 1) throw ConsistencyError("ad e_alpha is not nilpotent");
    }
  }
  symmetries_ = diagram_symmetries(rs_);
  graphs_.clear();
  for (const auto& rho : symmetries_) graphs_.push_back(build_graph(rho));
}

SignedPermutation AdjointRepresentation::build_graph(const DiagramSymmetry& rho) const {
  std::size_t nroots = rs_.size();
  std::size_t pos = rs_.positive_count();
  std::size_t l = static_cast<std::size_t>(rs_.rank());
  SignedPermutation p;
  p.target.resize(dimension());
  p.sign.assign(dimension(), 1);
  for (std::size_t r = 0; r < nroots; ++r) p.target[r] = extend_symmetry_to_roots(rs_, rho, r);
  for (std::size_t i = 0; i < l; ++i) p.target[nroots + i] = nroots + static_cast<std::size_t>(rho.perm[i]);
  // Positive roots come in height order, so both members of an extraspecial
  // pair already carry their sign.
  for (std::size_t xi = l; xi < pos; ++xi) {
    auto [a, b] = constants_.extraspecial().at(xi);
    int ratio = constants_.n(p.target[a], p.target[b]) / constants_.n(a, b);
    p.sign[xi] = p.sign[a] * p.sign[b] * ratio;
    p.sign[rs_.negative_of(xi)] = p.sign[xi];
  }
  for (std::size_t a = 0; a < nroots; ++a) {
    for (std::size_t b = 0; b < nroots; ++b) {
      long s = rs_.sum_index(a, b);
      if (s < 0) continue;
      if (p.sign[a] * p.sign[b] * constants_.n(p.target[a], p.target[b]) !=
          p.sign[static_cast<std::size_t>(s)] * constants_.n(a, b))
        throw ConsistencyError("graph automorphism sign constraints are inconsistent");
    }
  }
  return p;
}

const SignedPermutation& AdjointRepresentation::graph_automorphism(const DiagramSymmetry& rho) const {
  for (std::size_t i = 0; i < symmetries_.size(); ++i)
    if (symmetries_[i] == rho) return graphs_[i];
  throw DomainError("permutation is not a diagram symmetry of " + rs_.type().name());
}

int AdjointRepresentation::graph_sign(const DiagramSymmetry& rho, std::size_t root) const {
  return graph_automorphism(rho).sign.at(root);
}

RationalFunction apply_field(const ScalingAutomorphism& delta, const RationalFunction& x) {
  if (delta.is_identity()) return x;
  if (x.num_vars() > delta.num_vars())
    throw DomainError("entry field has more variables than the field automorphism acts on");
  return delta.apply(x);
}

std::vector<CommutatorFactor> commutator_factors(const AdjointRepresentation& rep, std::size_t alpha,
                                                 std::size_t beta) {
  const RootSystem& rs = rep.root_system();
  const ChevalleyBasisData& nc = rep.constants();
  const Root& r = rs.root(alpha);
  const Root& s = rs.root(beta);
  auto combo = [&](int i, int j) -> long {
    Root v(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) v[k] = i * r[k] + j * s[k];
    return rs.contains(v) ? static_cast<long>(rs.index_of(v)) : -1;
  };
  // M_{a,b,i} = (1/i!) N(a,b) N(a,a+b) ... N(a,(i-1)a+b)
  auto m = [&](std::size_t a, std::size_t b, int i) {
    Rational prod(1);
    std::size_t cur = b;
    for (int k = 0; k < i; ++k) {
      long next = rs.sum_index(a, cur);
      if (next < 0) return Rational(0);
      prod *= Rational(nc.n(a, cur));
      prod /= Rational(k + 1);
      cur = static_cast<std::size_t>(next);
    }
    return prod;
  };
  std::vector<CommutatorFactor> out;
  for (int total = 2; total <= 5; ++total) {
    for (int i = 1; i < total; ++i) {
      int j = total - i;
      long idx = combo(i, j);
      if (idx < 0) continue;
      Rational c;
      if (j == 1) {
        c = m(alpha, beta, i);
      } else if (i == 1) {
        c = m(beta, alpha, j);
        if (j % 2) c = -c;
      } else if (i == 3 && j == 2) {
        c = m(static_cast<std::size_t>(rs.sum_index(alpha, beta)), alpha, 2) / Rational(3);
      } else if (i == 2 && j == 3) {
        c = -Rational(2) * m(static_cast<std::size_t>(rs.sum_index(alpha, beta)), beta, 2) / Rational(3);
      } else {
        throw ConsistencyError("unexpected root string in commutator formula");
      }
      out.push_back(CommutatorFactor{i, j, static_cast<std::size_t>(idx), c});
    }
  }
  return out;
}

ModMatrix reduce_mod_p(const Matrix<Rational>& x, std::uint32_t p) {
  if (p < 2 || !is_prime(mpz_class(p))) throw DomainError("reduce_mod_p requires a prime modulus");
  ModMatrix out;
  out.n = x.rows();
  out.modulus = p;
  out.entries.reserve(x.rows() * x.cols());
  mpz_class mod(p);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Rational& v = x(i, j);
      mpz_class den = v.denominator();
      mpz_class den_mod = den % mod;
      if (den_mod == 0)
        throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + v.to_string() +
                          " is not " + std::to_string(p) + "-integral");
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), mod.get_mpz_t());
      mpz_class num = v.numerator() % mod;
      if (num < 0) num += mod;
      mpz_class r = (num * inv) % mod;
      out.entries.push_back(static_cast<std::uint32_t>(r.get_ui()));
    }
  }
  return out;
}

}  // namespace tck
