#pragma once

#include <vector>

#include "tck/finite_group.hpp"

namespace tck {

// Orbits of z . y = z y phi(z)^-1, blocks ordered by smallest member.
struct TwistedClassPartition {
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of;  // element index -> block index

  std::size_t count() const noexcept { return blocks.size(); }
};

TwistedClassPartition twisted_classes(const FiniteGroup& g, const GroupAutomorphism& phi);
std::size_t reidemeister_number(const FiniteGroup& g, const GroupAutomorphism& phi);

// R(phi o phi_g) == R(phi).
bool inner_twist_invariance(const FiniteGroup& g, const GroupAutomorphism& phi, std::uint32_t element);

struct QuotientResult {
  FiniteGroup quotient;
  GroupAutomorphism induced;
  std::vector<std::uint32_t> projection;  // element of G -> element of G/N
  std::vector<std::uint32_t> coset_leaders;  // minimal code per coset, ascending
};

// G/N realized as the action of G on the cosets of N. N = {e} returns G and
// phi unchanged.
QuotientResult induced_automorphism(const FiniteGroup& g, const Subgroup& n, const GroupAutomorphism& phi);

struct IsogredienceClassCount {
  std::size_t count = 0;           // direct orbit count
  std::size_t quotient_count = 0;  // R of the induced automorphism on G/Z(G)
};

// Both counts are computed; a disagreement raises ConsistencyError.
IsogredienceClassCount isogredience_count(const FiniteGroup& g, const GroupAutomorphism& phi);

// With x = z y phi(z^-1): x phi(x) ... phi^{m-1}(x) == z (y phi(y) ... phi^{m-1}(y)) phi^m(z^-1).
bool telescoping_product_check(const FiniteGroup& g, const GroupAutomorphism& phi, std::uint32_t y,
                               std::uint32_t z, unsigned m);

}  // namespace tck
