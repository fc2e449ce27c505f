#include "tck/witness.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "tck/error.hpp"
#include "tck/smith.hpp"

namespace tck {

namespace {

void require_diagonal(const Matrix<Rational>& g, std::size_t dim) {
  if (g.rows() != dim || g.cols() != dim) throw DomainError("element has the wrong dimension");
  if (!g.is_diagonal()) throw DomainError("element must be diagonal");
}

DiagramSymmetry normalized(const DiagramSymmetry& rho, int rank) {
  return rho.perm.empty() ? DiagramSymmetry::identity(rank) : rho;
}

SignedPermutation signed_identity(std::size_t n) {
  SignedPermutation p;
  p.target.resize(n);
  std::iota(p.target.begin(), p.target.end(), std::size_t{0});
  p.sign.assign(n, 1);
  return p;
}

const SignedPermutation& signed_graph(const AdjointRepresentation& rep, const DiagramSymmetry& rho) {
  return rep.graph_automorphism(normalized(rho, rep.root_system().rank()));
}

void validate(const AdjointRepresentation& rep, const ProductAutomorphism& phi) {
  std::size_t k = phi.factors.size();
  if (k == 0) throw DomainError("product automorphism needs at least one factor");
  if (phi.sigma.size() != k) throw DomainError("sigma has " + std::to_string(phi.sigma.size()) +
                                               " entries for " + std::to_string(k) + " factors");
  std::vector<bool> seen(k, false);
  for (std::size_t s : phi.sigma) {
    if (s >= k || seen[s]) throw DomainError("sigma is not a permutation");
    seen[s] = true;
  }
  if (!phi.factor_types.empty()) {
    if (phi.factor_types.size() != k) throw DomainError("factor_types has the wrong length");
    for (const auto& t : phi.factor_types)
      if (!(t == rep.root_system().type()))
        throw DomainError("mixed root systems are not supported (" + t.name() + " vs " +
                          rep.root_system().type().name() + ")");
  }
}

std::size_t sigma_power(const std::vector<std::size_t>& sigma, std::size_t i, std::size_t r) {
  for (std::size_t t = 0; t < r; ++t) i = sigma[i];
  return i;
}

ChevalleyAutomorphism<Rational> rational_part(const ChevalleyAutomorphism<RationalFunction>& phi) {
  if (!phi.graph_field_only()) throw DomainError("factor automorphism has an inner or diagonal part");
  ChevalleyAutomorphism<Rational> out;
  out.graph = phi.graph;
  out.field = phi.field;
  return out;
}

mpz_class valuation(const Rational& x, const mpz_class& p) {
  mpz_class n = abs(x.numerator()), d = x.denominator(), rem;
  long vn = static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(rem.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()));
  return mpz_class(vn - vd);
}

std::vector<Rational> root_diagonal(const Matrix<Rational>& g, std::size_t root_count) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < root_count; ++j) out.push_back(g(j, j));
  return out;
}

ObstructionCertificate certify(const RootSystemType& type, const std::vector<Matrix<Rational>>& g_hats,
                               std::size_t root_count, const ScalingAutomorphism& twist, unsigned power,
                               std::size_t transcendence, std::vector<Rational> c) {
  ObstructionCertificate cert;
  cert.type = type;
  cert.dimension = g_hats.front().rows();
  cert.root_count = root_count;
  cert.index = g_hats.size();
  cert.transcendence = transcendence;
  cert.bound = transcendence + 1;
  cert.family_size = g_hats.size();
  cert.power = power;
  cert.twist_generators = twist.power(power).scalars();
  cert.correction = c;

  std::vector<std::vector<Rational>> bs;
  for (const auto& g : g_hats) {
    bs.push_back(root_diagonal(g, root_count));
    std::vector<PrimeSupport> sup;
    for (const auto& b : bs.back()) sup.push_back(nu(b));
    cert.b_supports.push_back(std::move(sup));
  }
  cert.b_supports_disjoint = witness_supports_disjoint(bs);

  auto constraints = entrywise_constraint_system(g_hats.front(), g_hats.back(), root_count, twist, power, c);
  for (const auto& e : constraints) {
    if (e.block != Block::Q && e.block != Block::S) continue;
    CertifiedEntry ce{e, !e.admits_nonzero};
    if (ce.certified_zero) ++cert.certified_count;
    cert.entries.push_back(std::move(ce));
  }
  cert.determinant_forced_zero = !pattern_has_perfect_matching(certificate_pattern(cert));
  bool all = cert.certified_count == cert.entries.size();
  cert.verdict = cert.index > cert.bound && all && cert.b_supports_disjoint ? "obstructed" : "inconclusive";
  return cert;
}

std::vector<Rational> correction_from(const SignedPermutation& p, std::size_t root_count) {
  for (std::size_t j = 0; j < p.target.size(); ++j)
    if (p.target[j] != j) throw DomainError("graph part of the iterated automorphism is not trivial");
  std::vector<Rational> c;
  for (std::size_t j = 0; j < root_count; ++j) c.emplace_back(p.sign[j]);
  return c;
}

}  // namespace

WitnessSequence generate_witnesses(const AdjointRepresentation& rep, std::size_t count) {
  if (count == 0) throw DomainError("witness count must be >= 1");
  const RootSystem& rs = rep.root_system();
  std::size_t l = static_cast<std::size_t>(rs.rank());
  auto primes = first_primes(count * l);
  WitnessSequence w;
  w.type = rs.type();
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<unsigned long> ps(primes.begin() + i * l, primes.begin() + (i + 1) * l);
    Matrix<Rational> g = Matrix<Rational>::identity(rs.dimension());
    for (std::size_t j = 0; j < l; ++j) g = g * h_alpha(rep, j, Rational(static_cast<long>(ps[j])));
    if (!g.is_diagonal()) throw ConsistencyError("witness element is not diagonal");
    w.diagonals.push_back(root_diagonal(g, rs.size()));
    w.primes.push_back(std::move(ps));
    w.elements.push_back(std::move(g));
  }
  return w;
}

bool witness_supports_disjoint(const std::vector<std::vector<Rational>>& entries_per_witness) {
  std::vector<PrimeSupport> unions;
  for (const auto& entries : entries_per_witness) {
    PrimeSupport u;
    for (const auto& x : entries) {
      PrimeSupport s = nu(x);
      if (s.empty()) return false;
      u = u.united(s);
    }
    unions.push_back(std::move(u));
  }
  for (std::size_t i = 0; i < unions.size(); ++i)
    for (std::size_t j = i + 1; j < unions.size(); ++j)
      if (unions[i].intersects(unions[j])) return false;
  return true;
}

Matrix<Rational> twisted_power_product(const AdjointRepresentation& rep, const ChevalleyAutomorphism<Rational>& phi,
                                       const Matrix<Rational>& g, std::size_t m) {
  if (!phi.graph_field_only()) throw DomainError("twisted_power_product expects a graph+field automorphism");
  if (m == 0) throw DomainError("power must be >= 1");
  require_diagonal(g, rep.dimension());
  Matrix<Rational> cur = g, out = g;
  for (std::size_t r = 1; r < m; ++r) {
    cur = apply_automorphism(rep, phi, cur);
    out = out * cur;
  }
  return out;
}

Matrix<Rational> twisted_power_product(const AdjointRepresentation& rep,
                                       const ChevalleyAutomorphism<RationalFunction>& phi,
                                       const Matrix<RationalFunction>& g, std::size_t m) {
  Matrix<Rational> q = g.map([](const RationalFunction& x) {
    if (!x.is_constant()) throw DomainError("element has non-rational entry " + x.to_string());
    return x.constant_value();
  });
  if (!phi.graph_field_only()) throw DomainError("twisted_power_product expects a graph+field automorphism");
  return twisted_power_product(rep, rational_part(phi), q, m);
}

std::size_t ProductAutomorphism::sigma_order() const {
  std::size_t order = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    std::size_t len = 1;
    for (std::size_t j = sigma.at(i); j != i; j = sigma.at(j)) {
      if (++len > sigma.size()) throw DomainError("sigma is not a permutation");
    }
    order = std::lcm(order, len);
  }
  return order;
}

DirectSum apply_product(const AdjointRepresentation& rep, const ProductAutomorphism& phi, const DirectSum& x) {
  validate(rep, phi);
  if (x.size() != phi.k()) throw DomainError("direct sum has " + std::to_string(x.size()) + " components for " +
                                             std::to_string(phi.k()) + " factors");
  DirectSum out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t s = phi.sigma[i];
    out.push_back(apply_automorphism(rep, phi.factors[s], x[s]));
  }
  return out;
}

DirectSum product_aut_power_action(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                   const DirectSum& x, std::size_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  validate(rep, phi);
  if (x.size() != phi.k()) throw DomainError("direct sum has the wrong number of components");
  DirectSum formula;
  for (std::size_t i = 0; i < phi.k(); ++i) {
    Matrix<RationalFunction> y = x[sigma_power(phi.sigma, i, r)];
    for (std::size_t t = r; t >= 1; --t) y = apply_automorphism(rep, phi.factors[sigma_power(phi.sigma, i, t)], y);
    formula.push_back(std::move(y));
  }
  DirectSum iterated = x;
  for (std::size_t t = 0; t < r; ++t) iterated = apply_product(rep, phi, iterated);
  for (std::size_t i = 0; i < phi.k(); ++i)
    if (!(formula[i] == iterated[i]))
      throw ConsistencyError("iterated action differs from the psi formula at component " + std::to_string(i));
  return formula;
}

ComposedFactor compose_psi(const AdjointRepresentation& rep, const ProductAutomorphism& phi, std::size_t i,
                           std::size_t r) {
  validate(rep, phi);
  if (i >= phi.k()) throw DomainError("component index out of range");
  int rank = rep.root_system().rank();
  ComposedFactor out{DiagramSymmetry::identity(rank), ScalingAutomorphism(), signed_identity(rep.dimension())};
  // innermost factor phi_{s^r(i)} acts first
  for (std::size_t t = r; t >= 1; --t) {
    const auto& f = phi.factors[sigma_power(phi.sigma, i, t)];
    if (!f.graph_field_only()) throw DomainError("factor automorphism has an inner or diagonal part");
    DiagramSymmetry rho = normalized(f.graph, rank);
    out.graph = out.graph.compose(rho);
    out.signed_graph = out.signed_graph.compose(signed_graph(rep, rho));
    out.field = out.field.num_vars() == 0 ? f.field : (f.field.num_vars() == 0 ? out.field : out.field.compose(f.field));
  }
  return out;
}

char block_name(Block b) {
  switch (b) {
    case Block::Q: return 'Q';
    case Block::R: return 'R';
    case Block::S: return 'S';
    case Block::T: return 'T';
  }
  return '?';
}

bool in_character_group(const std::vector<Rational>& gens, const Rational& lambda) {
  if (lambda.is_zero()) return false;
  PrimeSupport primes;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("character generators must be nonzero");
    primes = primes.united(nu(g));
  }
  if (!nu(lambda).subset_of(primes)) return false;
  std::size_t k = gens.size();
  IntegerMatrix a(primes.size() + 1, k + 1);
  std::vector<mpz_class> b(primes.size() + 1);
  for (std::size_t r = 0; r < primes.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) a(r, j) = valuation(gens[j], primes.primes()[r]);
    b[r] = valuation(lambda, primes.primes()[r]);
  }
  // sign bits: sum_j e_j [g_j < 0] - 2 e_k = [lambda < 0]
  std::size_t s = primes.size();
  for (std::size_t j = 0; j < k; ++j) a(s, j) = gens[j].sign() < 0 ? 1 : 0;
  a(s, k) = -2;
  b[s] = lambda.sign() < 0 ? 1 : 0;
  return solve_integer_system(a, b).has_value();
}

std::vector<EntryConstraint> entrywise_constraint_system(const Matrix<Rational>& g1, const Matrix<Rational>& gi,
                                                         std::size_t root_count, const ScalingAutomorphism& twist,
                                                         unsigned power, std::vector<Rational> c) {
  std::size_t d = g1.rows();
  require_diagonal(g1, d);
  require_diagonal(gi, d);
  if (root_count > d) throw DomainError("root count exceeds the dimension");
  if (power == 0) throw DomainError("power must be >= 1");
  if (c.empty()) c.assign(root_count, Rational(1));
  if (c.size() != root_count) throw DomainError("correction vector must have one entry per root");
  for (const auto& x : c)
    if (x.is_zero()) throw DomainError("correction entries must be nonzero");
  auto hat = [&](const Matrix<Rational>& g, std::size_t j) { return j < root_count ? g(j, j) * c[j] : g(j, j); };
  std::vector<Rational> gens = twist.power(power).scalars();
  std::vector<EntryConstraint> out;
  out.reserve(d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      EntryConstraint e;
      e.row = m;
      e.col = n;
      bool qm = m < root_count, qn = n < root_count;
      e.block = qm ? (qn ? Block::Q : Block::R) : (qn ? Block::S : Block::T);
      e.eigencharacter = hat(g1, m).inverse() * hat(gi, n);
      e.admits_nonzero = in_character_group(gens, e.eigencharacter);
      out.push_back(std::move(e));
    }
  return out;
}

ObstructionCertificate obstruction_check(const AdjointRepresentation& rep, const WitnessSequence& witnesses,
                                         const DiagramSymmetry& rho, const ScalingAutomorphism& delta,
                                         std::size_t index, unsigned power) {
  const RootSystem& rs = rep.root_system();
  if (!(witnesses.type == rs.type())) throw DomainError("witnesses were generated for another root system");
  if (index < 1 || index > witnesses.count())
    throw DomainError("index " + std::to_string(index) + " outside 1.." + std::to_string(witnesses.count()));
  if (power == 0) throw DomainError("power must be >= 1");
  ChevalleyAutomorphism<Rational> phi;
  phi.graph = normalized(rho, rs.rank());
  phi.field = delta;
  SignedPermutation p = signed_identity(rep.dimension());
  for (unsigned r = 0; r < power; ++r) p = p.compose(signed_graph(rep, phi.graph));
  std::vector<Rational> c = correction_from(p, rs.size());
  std::vector<Matrix<Rational>> g_tilde;
  for (std::size_t j = 0; j < index; ++j) g_tilde.push_back(twisted_power_product(rep, phi, witnesses.elements[j], power));
  return certify(rs.type(), g_tilde, rs.size(), delta, power, delta.num_vars(), std::move(c));
}

FirstFactorProjection theorem3_project_first_factor(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                                    const Matrix<Rational>& g, unsigned power) {
  validate(rep, phi);
  if (power == 0) throw DomainError("power must be >= 1");
  require_diagonal(g, rep.dimension());
  std::vector<ChevalleyAutomorphism<Rational>> factors;
  for (const auto& f : phi.factors) factors.push_back(rational_part(f));
  FirstFactorProjection out;
  out.s = phi.sigma_order();
  out.steps = power * out.s;
  std::vector<Matrix<Rational>> cur(phi.k(), g);
  out.g_hat = g;
  for (std::size_t r = 1; r < out.steps; ++r) {
    std::vector<Matrix<Rational>> next;
    for (std::size_t i = 0; i < phi.k(); ++i) {
      std::size_t s = phi.sigma[i];
      next.push_back(apply_automorphism(rep, factors[s], cur[s]));
    }
    cur = std::move(next);
    out.g_hat = out.g_hat * cur[0];
  }
  out.theta = compose_psi(rep, phi, 0, out.s).field;
  out.total = compose_psi(rep, phi, 0, out.steps);
  return out;
}

ObstructionCertificate product_obstruction_check(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                                 const WitnessSequence& witnesses, std::size_t index,
                                                 unsigned power) {
  const RootSystem& rs = rep.root_system();
  if (!(witnesses.type == rs.type())) throw DomainError("witnesses were generated for another root system");
  if (index < 1 || index > witnesses.count())
    throw DomainError("index " + std::to_string(index) + " outside 1.." + std::to_string(witnesses.count()));
  std::vector<Matrix<Rational>> g_hats;
  FirstFactorProjection first;
  for (std::size_t j = 0; j < index; ++j) {
    FirstFactorProjection proj = theorem3_project_first_factor(rep, phi, witnesses.elements[j], power);
    g_hats.push_back(proj.g_hat);
    if (j == 0) first = std::move(proj);
  }
  std::size_t trdeg = 0;
  for (const auto& f : phi.factors) trdeg = std::max(trdeg, f.field.num_vars());
  std::vector<Rational> c = correction_from(first.total.signed_graph, rs.size());
  return certify(rs.type(), g_hats, rs.size(), first.theta, power, trdeg, std::move(c));
}

Pattern certificate_pattern(const ObstructionCertificate& cert) {
  Pattern p(cert.dimension, std::vector<bool>(cert.dimension, true));
  for (const auto& e : cert.entries)
    if (e.certified_zero) p[e.constraint.row][e.constraint.col] = false;
  return p;
}

Polynomial pattern_determinant(const Pattern& pattern, std::size_t max_states) {
  std::size_t d = pattern.size();
  if (d > 64) throw DomainError("pattern_determinant supports at most 64 columns");
  std::vector<std::vector<long>> var(d, std::vector<long>(d, -1));
  std::size_t nv = 0;
  for (std::size_t r = 0; r < d; ++r) {
    if (pattern[r].size() != d) throw DomainError("pattern must be square");
    for (std::size_t c = 0; c < d; ++c)
      if (pattern[r][c]) var[r][c] = static_cast<long>(nv++);
  }
  // expand row by row; the state is the set of columns already used
  std::map<std::uint64_t, Polynomial> states{{0, Polynomial(Rational(1), nv)}};
  for (std::size_t r = 0; r < d && !states.empty(); ++r) {
    std::map<std::uint64_t, Polynomial> next;
    for (const auto& [mask, poly] : states)
      for (std::size_t c = 0; c < d; ++c) {
        if (var[r][c] < 0 || (mask >> c & 1U)) continue;
        int later = __builtin_popcountll(c + 1 < 64 ? mask >> (c + 1) : 0);
        Exponents e(nv, 0);
        e[static_cast<std::size_t>(var[r][c])] = 1;
        Polynomial term = poly.times_monomial(e);
        if (later % 2) term = -term;
        auto [it, fresh] = next.try_emplace(mask | (std::uint64_t{1} << c), term);
        if (!fresh) it->second += term;
        if (next.size() > max_states) throw ResourceError("pattern determinant expansion exceeds the state cap");
      }
    states = std::move(next);
  }
  Polynomial det(nv);
  for (const auto& [mask, poly] : states) det += poly;
  return det;
}

bool pattern_has_perfect_matching(const Pattern& pattern) {
  std::size_t d = pattern.size();
  std::vector<long> match_col(d, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (!pattern[r][c] || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]))) {
        match_col[c] = static_cast<long>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < d; ++r) {
    seen.assign(d, false);
    if (!augment(r)) return false;
  }
  return true;
}

}  // namespace tck
