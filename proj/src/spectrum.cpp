#include "tck/spectrum.hpp"

#include "tck/error.hpp"
#include "tck/finite_group.hpp"
#include "tck/prime_support.hpp"
#include "tck/twisted.hpp"

namespace tck {

ExtendedCount ExtendedCount::finite(const mpz_class& v) {
  if (v < 1) throw DomainError("finite count must be positive");
  ExtendedCount c;
  c.value_ = v;
  return c;
}

const mpz_class& ExtendedCount::value() const {
  if (!value_) throw DomainError("count is infinite");
  return *value_;
}

std::string ExtendedCount::to_string() const { return value_ ? value_->get_str() : "infinity"; }

namespace {

void require_unimodular(const IntegerMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("matrix must be square and nonempty");
  mpz_class d = determinant(m);
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular (det = " + d.get_str() + ")");
}

IntegerMatrix block_b(const mpz_class& m) {
  return IntegerMatrix::from_rows({{0, 1}, {-1, mpz_class(2 - m)}});
}

// Companion matrix of x^3 + m x^2 - 1: det 1, det(C - I) = -m.
IntegerMatrix block_c3(const mpz_class& m) {
  return IntegerMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, mpz_class(-m)}});
}

mpz_class gcd_mod(const mpz_class& d, std::uint32_t m) {
  mpz_class g;
  mpz_class mm(m);
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
  return g;
}

std::uint32_t residue(const mpz_class& v, std::uint32_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return static_cast<std::uint32_t>(r.get_ui());
}

// Is v = p^k for some k >= 1?
bool positive_power(mpz_class v, const mpz_class& p) {
  if (v < p) return false;
  while (v > 1) {
    if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) return false;
    v /= p;
  }
  return true;
}

}  // namespace

ExtendedCount reidemeister_zn(const IntegerMatrix& m) {
  require_unimodular(m);
  mpz_class d = determinant(m.minus_identity());
  if (d == 0) return ExtendedCount::infinite();
  return ExtendedCount::finite(abs(d));
}

IntegerMatrix zn_fullness_witness(std::size_t n, const mpz_class& m) {
  if (n < 2) throw DomainError("Z has spectrum {2, infinity}; fullness witnesses need n >= 2");
  if (m < 1) throw DomainError("target Reidemeister number must be >= 1");
  IntegerMatrix out;
  std::size_t used;
  if (n % 2 == 0) {
    out = block_b(m);
    used = 2;
  } else if (m % 2 == 0) {
    out = direct_sum(block_b(m / 2), IntegerMatrix::from_rows({{-1}}));
    used = 3;
  } else {
    out = block_c3(m);
    used = 3;
  }
  for (; used < n; used += 2) out = direct_sum(out, block_b(1));
  return out;
}

mpz_class zn_cokernel_mod(const IntegerMatrix& m, std::uint32_t modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  SmithForm s = smith_normal_form(m.minus_identity());
  mpz_class prod = 1;
  for (const auto& d : s.diagonal) prod *= gcd_mod(d, modulus);
  for (std::size_t i = s.diagonal.size(); i < m.rows(); ++i) prod *= modulus;
  return prod;
}

std::size_t zn_oracle(const IntegerMatrix& m, std::uint32_t modulus) {
  require_unimodular(m);
  std::size_t n = m.rows();
  FiniteGroup g = zmod_power(modulus, n);
  std::size_t d = n + 1;
  std::vector<Code> images;
  for (std::size_t i = 0; i < n; ++i) {
    Code c(d * d, 0);
    for (std::size_t k = 0; k < d; ++k) c[k * d + k] = 1;
    for (std::size_t j = 0; j < n; ++j) c[j * d + n] = residue(m(j, i), modulus);
    images.push_back(c);
  }
  return reidemeister_number(g, GroupAutomorphism::from_generator_codes(g, images));
}

ExtendedCount heisenberg_reidemeister(const IntegerMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("Heisenberg automorphisms are given by 2x2 matrices");
  require_unimodular(m);
  mpz_class a = abs(determinant(m.minus_identity()));
  mpz_class b = abs(determinant(m) - 1);
  if (a == 0 || b == 0) return ExtendedCount::infinite();
  return ExtendedCount::finite(a * b);
}

mpz_class heisenberg_cokernel_product(const IntegerMatrix& m, std::uint32_t modulus) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("Heisenberg automorphisms are given by 2x2 matrices");
  return zn_cokernel_mod(m, modulus) * gcd_mod(determinant(m) - 1, modulus);
}

namespace {

struct LiftedAutomorphism {
  FiniteGroup group;
  GroupAutomorphism phi;
  HeisenbergLift lift;
};

LiftedAutomorphism lift_heisenberg(const IntegerMatrix& m, std::uint32_t modulus) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("Heisenberg automorphisms are given by 2x2 matrices");
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  require_unimodular(m);
  FiniteGroup h = heisenberg_group(modulus);
  std::uint32_t x = h.generators()[0], y = h.generators()[1];
  std::uint32_t z = h.mul(h.mul(x, y), h.mul(h.inv(x), h.inv(y)));
  auto word = [&](const mpz_class& a, const mpz_class& c, std::uint32_t e) {
    return h.mul(h.mul(h.pow(x, residue(a, modulus)), h.pow(y, residue(c, modulus))), h.pow(z, e));
  };
  for (std::uint32_t e = 0; e < modulus; ++e)
    for (std::uint32_t f = 0; f < modulus; ++f) {
      try {
        GroupAutomorphism phi =
            GroupAutomorphism::from_generator_images(h, {word(m(0, 0), m(1, 0), e), word(m(0, 1), m(1, 1), f)});
        return LiftedAutomorphism{std::move(h), std::move(phi), HeisenbergLift{e, f}};
      } catch (const DomainError&) {
      }
    }
  throw DomainError("no automorphism of H(Z/" + std::to_string(modulus) + ") induces " + m.to_string());
}

}  // namespace

HeisenbergLift heisenberg_lift(const IntegerMatrix& m, std::uint32_t modulus) {
  return lift_heisenberg(m, modulus).lift;
}

std::size_t heisenberg_oracle(const IntegerMatrix& m, std::uint32_t modulus) {
  LiftedAutomorphism l = lift_heisenberg(m, modulus);
  return reidemeister_number(l.group, l.phi);
}

bool lamplighter_r_infinity(long n) {
  if (n < 2) throw DomainError("lamplighter criterion needs n >= 2");
  return n % 2 == 0 || n % 3 == 0;
}

std::string SpectrumDescriptor::description() const {
  std::string p = p_.get_str();
  switch (case_) {
    case Case::A: return "{2n | n >= 1, gcd(n," + p + ") = 1} U {infinity}";
    case Case::B: return "{2*" + p + "^l*(" + p + "^k +- 1), 4*" + p + "^l | l, k >= 1} U {infinity}";
    case Case::C: return "{2*(" + p + "^l +- 1), 4 | l >= 1} U {infinity}";
    case Case::D: return "{infinity}";
  }
  return "";
}

bool SpectrumDescriptor::contains(const ExtendedCount& v) const {
  if (v.is_infinite()) return true;
  const mpz_class& n = v.value();
  if (case_ == Case::D || n % 2 != 0) return false;
  mpz_class half = n / 2;
  switch (case_) {
    case Case::A: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), half.get_mpz_t(), p_.get_mpz_t());
      return g == 1;
    }
    case Case::B: {
      if (n % 4 == 0 && positive_power(n / 4, p_)) return true;
      mpz_class w = half;
      while (mpz_divisible_p(w.get_mpz_t(), p_.get_mpz_t())) {
        w /= p_;
        if (positive_power(w - 1, p_) || positive_power(w + 1, p_)) return true;
      }
      return false;
    }
    case Case::C:
      return n == 4 || positive_power(half - 1, p_) || positive_power(half + 1, p_);
    case Case::D: return false;
  }
  return false;
}

SpectrumDescriptor metabelian_spectrum(const Rational& r, const Rational& s, const mpz_class& p) {
  if (!is_prime(p)) throw DomainError("p = " + p.get_str() + " is not prime");
  PrimeSupport only_p({p});
  for (const Rational* x : {&r, &s})
    if (x->is_zero() || !nu(*x).subset_of(only_p))
      throw DomainError(x->to_string() + " is not a unit of Z[1/" + p.get_str() + "]");
  using Case = SpectrumDescriptor::Case;
  bool unit_r = r.abs().is_one();
  if (unit_r && r == s) return SpectrumDescriptor(Case::A, p);
  if (unit_r && r == -s) return SpectrumDescriptor(Case::B, p);
  if ((r * s).is_one() && !unit_r) return SpectrumDescriptor(Case::C, p);
  return SpectrumDescriptor(Case::D, p);
}

}  // namespace tck
