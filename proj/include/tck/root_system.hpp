#pragma once

#include <map>
#include <string>
#include <vector>

#include "tck/rational.hpp"

namespace tck {

// Root as integer coordinates in the simple-root basis.
using Root = std::vector<int>;

struct RootSystemType {
  char family = 'A';
  int rank = 1;

  // "A2", "d4", "G2"; throws DomainError on inadmissible input.
  static RootSystemType parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

bool is_admissible(const RootSystemType& t);

// Indecomposable reduced root system in Bourbaki numbering.
//
// Roots are indexed in a fixed order: positive roots by increasing height
// (ties by decreasing simple-root coordinates, so index i < l is alpha_{i+1}),
// then their negatives in the same order.
class RootSystem {
public:
  static RootSystem build(const RootSystemType& t);

  const RootSystemType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t positive_count() const noexcept { return roots_.size() / 2; }
  std::size_t dimension() const noexcept { return roots_.size() + static_cast<std::size_t>(type_.rank); }

  const std::vector<Root>& roots() const noexcept { return roots_; }
  const Root& root(std::size_t index) const { return roots_.at(index); }
  const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
  // Squared lengths of the simple roots, short roots normalized to 2.
  const std::vector<int>& simple_lengths() const noexcept { return lengths_; }

  bool contains(const Root& r) const { return index_.count(r) != 0; }
  // Throws DomainError for non-roots.
  std::size_t index_of(const Root& r) const;
  // Index of the sum of two roots, or -1 when it is not a root.
  long sum_index(std::size_t a, std::size_t b) const;
  std::size_t negative_of(std::size_t index) const;
  bool is_positive(std::size_t index) const noexcept { return index < positive_count(); }
  int height(std::size_t index) const;

  // Symmetric form (a, b) with short simple roots of squared length 2.
  int inner(const Root& a, const Root& b) const;
  int length2(const Root& a) const { return inner(a, a); }
  // <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
  int cartan_integer(const Root& beta, const Root& alpha) const;
  int cartan_integer(std::size_t beta, std::size_t alpha) const;
  // Coordinates of alpha^vee in the simple coroot basis.
  std::vector<int> coroot(std::size_t alpha) const;

  Root reflect(const Root& beta, int simple) const;

private:
  RootSystemType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
};

int cartan_integer(const RootSystem& rs, const Root& beta, const Root& alpha);

// Permutation of the simple roots preserving the Cartan matrix.
struct DiagramSymmetry {
  std::vector<int> perm;  // simple root i maps to perm[i] (0-based)

  static DiagramSymmetry identity(int rank);
  bool is_identity() const;
  int order() const;
  DiagramSymmetry compose(const DiagramSymmetry& after) const;  // after o this
  DiagramSymmetry power(int n) const;
  friend bool operator==(const DiagramSymmetry&, const DiagramSymmetry&) = default;
};

// All Cartan-preserving permutations, identity first, then lexicographic.
std::vector<DiagramSymmetry> diagram_symmetries(const RootSystem& rs);

Root extend_symmetry_to_roots(const RootSystem& rs, const DiagramSymmetry& rho, const Root& alpha);
std::size_t extend_symmetry_to_roots(const RootSystem& rs, const DiagramSymmetry& rho, std::size_t alpha);

// Structure constants [e_a, e_b] = N(a,b) e_{a+b} of a Chevalley basis, with
// signs fixed by N = +(p+1) on extraspecial pairs.
class ChevalleyBasisData {
public:
  static ChevalleyBasisData build(const RootSystem& rs);

  // Zero when a+b is not a root.
  int n(std::size_t a, std::size_t b) const { return table_[a * count_ + b]; }
  // Count of pairs (a,b) with a+b a root.
  std::size_t nonzero_count() const;
  // Generating extraspecial pair (alpha, beta) of each positive non-simple root.
  const std::map<std::size_t, std::pair<std::size_t, std::size_t>>& extraspecial() const noexcept {
    return extraspecial_;
  }

private:
  std::size_t count_ = 0;
  std::vector<int> table_;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> extraspecial_;
};

ChevalleyBasisData structure_constants(const RootSystem& rs);

// Largest p with beta - p*alpha a root.
int string_down(const RootSystem& rs, std::size_t alpha, std::size_t beta);

}  // namespace tck
