#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tck/chevalley.hpp"
#include "tck/polynomial.hpp"
#include "tck/prime_support.hpp"

namespace tck {

// g_i = h_{alpha_1}(p_i1) ... h_{alpha_l}(p_il) with primes 2, 3, 5, ...
// consumed l at a time.
struct WitnessSequence {
  RootSystemType type;
  std::vector<std::vector<unsigned long>> primes;
  std::vector<Matrix<Rational>> elements;
  std::vector<std::vector<Rational>> diagonals;  // a_ij, j over the roots

  std::size_t count() const noexcept { return elements.size(); }
};

WitnessSequence generate_witnesses(const AdjointRepresentation& rep, std::size_t count);

// Union of nu over each group; true when the unions are pairwise disjoint and
// every entry has nonempty support.
bool witness_supports_disjoint(const std::vector<std::vector<Rational>>& entries_per_witness);

// prod_{r<m} phi^r(g) for diagonal rational g and graph+field phi.
Matrix<Rational> twisted_power_product(const AdjointRepresentation& rep, const ChevalleyAutomorphism<Rational>& phi,
                                       const Matrix<Rational>& g, std::size_t m);
// Same, for an element given over Q(T); entries must be constants.
Matrix<Rational> twisted_power_product(const AdjointRepresentation& rep,
                                       const ChevalleyAutomorphism<RationalFunction>& phi,
                                       const Matrix<RationalFunction>& g, std::size_t m);

// (phi_1, ..., phi_k; sigma) acting by x_1 + ... + x_k -> phi_{s(1)}(x_{s(1)}) + ... ;
// sigma is 0-based, i -> sigma[i].
struct ProductAutomorphism {
  std::vector<ChevalleyAutomorphism<RationalFunction>> factors;
  std::vector<std::size_t> sigma;
  std::vector<RootSystemType> factor_types;  // empty: all equal to the representation's type

  std::size_t k() const noexcept { return factors.size(); }
  std::size_t sigma_order() const;
};

using DirectSum = std::vector<Matrix<RationalFunction>>;

DirectSum apply_product(const AdjointRepresentation& rep, const ProductAutomorphism& phi, const DirectSum& x);

// phi^r via psi_i = phi_{s(i)} phi_{s^2(i)} ... phi_{s^r(i)} applied to x_{s^r(i)};
// cross-checked against r-fold application (ConsistencyError on mismatch).
DirectSum product_aut_power_action(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                   const DirectSum& x, std::size_t r);

// Graph and field parts of psi_i after r steps.
struct ComposedFactor {
  DiagramSymmetry graph;
  ScalingAutomorphism field;
  SignedPermutation signed_graph;
};
ComposedFactor compose_psi(const AdjointRepresentation& rep, const ProductAutomorphism& phi, std::size_t i,
                           std::size_t r);

enum class Block { Q, R, S, T };
char block_name(Block b);

struct EntryConstraint {
  std::size_t row = 0;
  std::size_t col = 0;
  Block block = Block::Q;
  Rational eigencharacter;  // twist^power(z_mn) = eigencharacter * z_mn
  bool admits_nonzero = false;  // eigencharacter is a character value of twist^power
};

// Unfolds twist^power(Z) = g^_1^{-1} Z g^_i with g^ = g~ diag(c, 1..1),
// c defaulting to all ones.
std::vector<EntryConstraint> entrywise_constraint_system(const Matrix<Rational>& g1, const Matrix<Rational>& gi,
                                                         std::size_t root_count, const ScalingAutomorphism& twist,
                                                         unsigned power = 6, std::vector<Rational> c = {});

// Is lambda a character value prod gens_j^{e_j}, e in Z^k? Exactly those
// lambda admit nonzero eigenvectors of the scaling T_j -> gens_j T_j.
bool in_character_group(const std::vector<Rational>& gens, const Rational& lambda);

struct CertifiedEntry {
  EntryConstraint constraint;
  bool certified_zero = false;
};

struct ObstructionCertificate {
  RootSystemType type;
  std::size_t dimension = 0;
  std::size_t root_count = 0;
  std::size_t index = 0;          // 1-based witness index analysed
  std::size_t transcendence = 0;  // k
  std::size_t bound = 0;          // k + 1
  std::size_t family_size = 0;    // witnesses 1..index
  unsigned power = 6;
  std::vector<Rational> twist_generators;  // character values of twist^power
  std::vector<Rational> correction;        // c
  std::vector<std::vector<PrimeSupport>> b_supports;  // per witness, per root
  bool b_supports_disjoint = false;
  std::vector<CertifiedEntry> entries;  // Q and S positions
  std::size_t certified_count = 0;
  bool determinant_forced_zero = false;
  std::string verdict;  // "obstructed" | "inconclusive"

  bool obstructed() const { return verdict == "obstructed"; }
};

// Twisted pair from the single-factor obstruction pipeline with phi = rho-bar delta-bar.
ObstructionCertificate obstruction_check(const AdjointRepresentation& rep, const WitnessSequence& witnesses,
                                         const DiagramSymmetry& rho, const ScalingAutomorphism& delta,
                                         std::size_t index, unsigned power = 6);

struct FirstFactorProjection {
  Matrix<Rational> g_hat;      // first component of prod_{r < power*s} phi^r(g + ... + g)
  ScalingAutomorphism theta;   // field part of psi_1 after s steps
  ComposedFactor total;        // psi_1 after power*s steps
  std::size_t s = 1;
  std::size_t steps = 0;
};

FirstFactorProjection theorem3_project_first_factor(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                                    const Matrix<Rational>& g, unsigned power = 6);

ObstructionCertificate product_obstruction_check(const AdjointRepresentation& rep, const ProductAutomorphism& phi,
                                                 const WitnessSequence& witnesses, std::size_t index,
                                                 unsigned power = 6);

// Zero pattern of Z: true marks a free (unconstrained) entry.
using Pattern = std::vector<std::vector<bool>>;
Pattern certificate_pattern(const ObstructionCertificate& cert);

// Determinant of the matrix with an independent variable at each free entry
// (numbered row-major). ResourceError if the expansion exceeds max_states.
Polynomial pattern_determinant(const Pattern& pattern, std::size_t max_states = 200000);

// Does the bipartite row/column graph of free entries have a perfect matching?
bool pattern_has_perfect_matching(const Pattern& pattern);

}  // namespace tck
