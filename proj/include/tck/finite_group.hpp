#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tck {

using Code = std::vector<std::uint32_t>;

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept;
};

enum class Encoding { Perm, MatMod };

std::string encoding_name(Encoding e);

// Size cap for closures: TCK_CLOSURE_CAP if set, else 200000.
std::size_t closure_cap();

// Finite group of permutations (image arrays on 0..degree-1) or of square
// matrices over Z/modulus (row-major). Elements are indexed in breadth-first
// discovery order from the identity (index 0), each new element being
// parent * generator.
class FiniteGroup {
public:
  // For Perm, `parameter` is the degree; for MatMod it is the modulus and
  // `dimension` the matrix size.
  static FiniteGroup closure(Encoding encoding, std::uint32_t parameter, std::size_t dimension,
                             const std::vector<Code>& generators, std::size_t cap = closure_cap());
  static FiniteGroup permutations(std::size_t degree, const std::vector<Code>& generators);
  static FiniteGroup matrices(std::uint32_t modulus, std::size_t dimension, const std::vector<Code>& generators);

  Encoding encoding() const noexcept { return encoding_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t dimension() const noexcept { return dimension_; }  // degree or matrix size

  std::size_t size() const noexcept { return elements_.size(); }
  const Code& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Code>& elements() const noexcept { return elements_; }
  const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }
  std::uint32_t identity() const noexcept { return 0; }

  bool contains(const Code& c) const { return index_.count(c) != 0; }
  // Throws DomainError when `c` is not an element.
  std::uint32_t index_of(const Code& c) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inverse_.at(a); }
  std::uint32_t pow(std::uint32_t a, long k) const;
  std::size_t order_of(std::uint32_t a) const;

  std::uint32_t bfs_parent(std::uint32_t a) const { return parent_.at(a); }
  std::uint32_t bfs_generator(std::uint32_t a) const { return via_.at(a); }  // position in generators()

  Code multiply_codes(const Code& a, const Code& b) const;
  Code identity_code() const;

private:
  Encoding encoding_ = Encoding::Perm;
  std::uint32_t modulus_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Code> elements_;
  std::unordered_map<Code, std::uint32_t, CodeHash> index_;
  std::vector<std::uint32_t> generators_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;  // Cayley table for small groups
};

// Automorphism stored as the image of every element index.
class GroupAutomorphism {
public:
  GroupAutomorphism() = default;

  // Extends the generator images along the breadth-first tree and verifies
  // phi(x s) = phi(x) phi(s) for every x and generator s, and bijectivity.
  static GroupAutomorphism from_generator_images(const FiniteGroup& g, const std::vector<std::uint32_t>& images);
  static GroupAutomorphism from_generator_codes(const FiniteGroup& g, const std::vector<Code>& images);
  static GroupAutomorphism identity(const FiniteGroup& g);
  static GroupAutomorphism inner(const FiniteGroup& g, std::uint32_t element);  // x -> g x g^-1

  std::uint32_t operator()(std::uint32_t x) const { return map_.at(x); }
  const std::vector<std::uint32_t>& map() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }
  bool is_identity() const;

  GroupAutomorphism compose(const GroupAutomorphism& first) const;  // this o first
  GroupAutomorphism inverse() const;
  GroupAutomorphism power(long k) const;
  std::vector<std::uint32_t> generator_images(const FiniteGroup& g) const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;

private:
  explicit GroupAutomorphism(std::vector<std::uint32_t> map) : map_(std::move(map)) {}
  std::vector<std::uint32_t> map_;
};

// Subgroups are sorted vectors of element indices.
using Subgroup = std::vector<std::uint32_t>;

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& n);
bool is_invariant(const GroupAutomorphism& phi, const Subgroup& n);

// Every automorphism, found by searching generator images of matching order.
std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g);

// Catalog.
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n, acting on n points
FiniteGroup quaternion_group();             // regular permutation representation
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup special_linear_2_3();           // SL(2,3) as 2x2 matrices mod 3
// Upper unitriangular 3x3 matrices over Z/m, generators X = I + E12, Y = I + E23.
FiniteGroup heisenberg_group(std::uint32_t m);
// (Z/m)^n as (n+1)x(n+1) translation matrices; generator i is e_i.
FiniteGroup zmod_power(std::uint32_t m, std::size_t n);

}  // namespace tck
