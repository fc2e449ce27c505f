#include "tck/prime_support.hpp"

#include <algorithm>

#include "tck/error.hpp"

namespace tck {

namespace {

constexpr unsigned long kTrialLimit = 10000;

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      return mpz_class(r % n);
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

PrimeSupport::PrimeSupport(std::vector<mpz_class> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const auto& p : primes_)
    if (!is_prime(p)) throw DomainError("prime support member " + p.get_str() + " is not prime");
}

bool PrimeSupport::contains(const mpz_class& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSupport::intersects(const PrimeSupport& other) const {
  auto a = primes_.begin();
  auto b = other.primes_.begin();
  while (a != primes_.end() && b != other.primes_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool PrimeSupport::subset_of(const PrimeSupport& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

PrimeSupport PrimeSupport::united(const PrimeSupport& other) const {
  std::vector<mpz_class> merged;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(merged));
  PrimeSupport result;
  result.primes_ = std::move(merged);
  return result;
}

std::string PrimeSupport::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += primes_[i].get_str();
  }
  return s + "}";
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<mpz_class> prime_divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::vector<mpz_class> out;
  if (n <= 1) return out;
  for (unsigned long p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimeSupport nu(const Rational& x) {
  if (x.is_zero()) throw DomainError("nu is undefined at 0");
  auto primes = prime_divisors(x.numerator());
  auto more = prime_divisors(x.denominator());
  primes.insert(primes.end(), more.begin(), more.end());
  return PrimeSupport(std::move(primes));
}

bool supports_pairwise_disjoint(std::span<const Rational> xs) {
  std::vector<PrimeSupport> supports;
  supports.reserve(xs.size());
  for (const auto& x : xs) supports.push_back(nu(x));
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = i + 1; j < supports.size(); ++j)
      if (supports[i].intersects(supports[j])) return false;
  return true;
}

std::vector<unsigned long> first_primes(std::size_t count) {
  std::vector<unsigned long> primes;
  for (unsigned long candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (unsigned long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) { prime = false; break; }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

}  // namespace tck
