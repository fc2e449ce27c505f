#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tck/rational.hpp"
#include "tck/smith.hpp"

namespace tck {

// Positive integer or infinity.
class ExtendedCount {
public:
  static ExtendedCount infinite() { return ExtendedCount(); }
  static ExtendedCount finite(const mpz_class& v);

  bool is_infinite() const noexcept { return !value_; }
  const mpz_class& value() const;  // throws on infinity
  std::string to_string() const;   // decimal or "infinity"

  friend bool operator==(const ExtendedCount& a, const ExtendedCount& b) { return a.value_ == b.value_; }

private:
  ExtendedCount() = default;
  std::optional<mpz_class> value_;
};

// |det(M - I)| for unimodular M, infinity when it vanishes.
ExtendedCount reidemeister_zn(const IntegerMatrix& m);

// Unimodular n x n matrix with reidemeister_zn = m.
IntegerMatrix zn_fullness_witness(std::size_t n, const mpz_class& m);

// prod gcd(d_i, m) over the Smith diagonal of M - I, with gcd(0, m) = m.
mpz_class zn_cokernel_mod(const IntegerMatrix& m, std::uint32_t modulus);

// Brute-force twisted-class count of the map induced by M on (Z/m)^n.
std::size_t zn_oracle(const IntegerMatrix& m, std::uint32_t modulus);

// |det(M - I)| * |det M - 1| for unimodular 2x2 M, infinity if either vanishes.
ExtendedCount heisenberg_reidemeister(const IntegerMatrix& m);

// |coker_m(M - I)| * |coker_m(det M - 1)|.
mpz_class heisenberg_cokernel_product(const IntegerMatrix& m, std::uint32_t modulus);

// Generator images X -> X^a Y^c Z^e, Y -> X^b Y^d Z^f on H(Z/m) for
// M = [[a,b],[c,d]], using the first central correction (e, f) that yields an
// automorphism. Throws DomainError if none does.
struct HeisenbergLift {
  std::uint32_t e = 0;
  std::uint32_t f = 0;
};
HeisenbergLift heisenberg_lift(const IntegerMatrix& m, std::uint32_t modulus);

// Twisted-class count on H(Z/m) for the lifted automorphism.
std::size_t heisenberg_oracle(const IntegerMatrix& m, std::uint32_t modulus);

// Z/n wr Z has R_infinity iff 2 | n or 3 | n.
bool lamplighter_r_infinity(long n);

// Reidemeister spectrum of Z[1/p]^2 x| Z with theta(1) = diag(r, s).
class SpectrumDescriptor {
public:
  enum class Case { A, B, C, D };

  SpectrumDescriptor(Case c, mpz_class p) : case_(c), p_(std::move(p)) {}

  Case family() const noexcept { return case_; }
  char label() const noexcept { return static_cast<char>('a' + static_cast<int>(case_)); }
  const mpz_class& prime() const noexcept { return p_; }
  std::string description() const;
  bool contains(const ExtendedCount& v) const;
  bool contains_infinity() const noexcept { return true; }

private:
  Case case_;
  mpz_class p_;
};

SpectrumDescriptor metabelian_spectrum(const Rational& r, const Rational& s, const mpz_class& p);

}  // namespace tck
