#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tck/rational.hpp"

namespace tck {

// Finite ascending set of primes.
class PrimeSupport {
public:
  PrimeSupport() = default;
  explicit PrimeSupport(std::vector<mpz_class> primes);

  const std::vector<mpz_class>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(const mpz_class& p) const;
  bool intersects(const PrimeSupport& other) const;
  bool subset_of(const PrimeSupport& other) const;
  PrimeSupport united(const PrimeSupport& other) const;

  std::string to_string() const;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;

private:
  std::vector<mpz_class> primes_;
};

// Distinct prime divisors of |n| in ascending order; empty for |n| <= 1.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

// Primes dividing the reduced numerator or denominator; DomainError at zero.
PrimeSupport nu(const Rational& x);

bool supports_pairwise_disjoint(std::span<const Rational> xs);

// The first `count` primes, 2, 3, 5, ...
std::vector<unsigned long> first_primes(std::size_t count);

bool is_prime(const mpz_class& n);

}  // namespace tck
