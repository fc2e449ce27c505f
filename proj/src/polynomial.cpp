#include "tck/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "tck/error.hpp"

namespace tck {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

unsigned at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0u; }

std::string coefficient_text(const Rational& c) {
  return c.is_integer() ? c.numerator().get_str() : c.numerator().get_str() + "/" + c.denominator().get_str();
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total(a), db = total(b);
  if (da != db) return da < db;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    unsigned x = at(a, i), y = at(b, i);
    if (x != y) return x < y;
  }
  return false;
}

Polynomial::Polynomial(const Rational& constant, std::size_t num_vars) : num_vars_(num_vars) {
  if (!constant.is_zero()) terms_.emplace(Exponents(num_vars, 0), constant);
}

Polynomial Polynomial::variable(std::size_t index, std::size_t num_vars) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(Rational(1), std::move(e));
}

Polynomial Polynomial::monomial(const Rational& coefficient, Exponents exponents) {
  Polynomial p(exponents.size());
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : total(terms_.rbegin()->first); }

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, at(e, var));
  return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, unsigned power) const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (at(e, var) != power) continue;
    Exponents f = e;
    if (var < f.size()) f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Exponents Polynomial::padded(const Exponents& e) const {
  Exponents f = e;
  f.resize(num_vars_, 0);
  return f;
}

Polynomial Polynomial::with_num_vars(std::size_t num_vars) const {
  if (num_vars < num_vars_) {
    for (const auto& [e, c] : terms_)
      for (std::size_t i = num_vars; i < e.size(); ++i)
        if (e[i] != 0) throw DomainError("cannot drop a variable that occurs");
  }
  Polynomial out(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(num_vars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Exponents Polynomial::monomial_content() const {
  Exponents m(num_vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = padded(e);
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::min(m[i], at(e, i));
  }
  return m;
}

Polynomial Polynomial::divide_by_monomial(const Exponents& exponents) const {
  Polynomial out(std::max(num_vars_, exponents.size()));
  for (const auto& [e, c] : terms_) {
    Exponents f = out.padded(e);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (f[i] < exponents[i]) throw DomainError("monomial does not divide polynomial");
      f[i] -= exponents[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::times_monomial(const Exponents& exponents) const {
  Polynomial out(std::max(num_vars_, exponents.size()));
  for (const auto& [e, c] : terms_) {
    Exponents f = out.padded(e);
    for (std::size_t i = 0; i < exponents.size(); ++i) f[i] += exponents[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  std::size_t n = std::max(num_vars_, divisor.num_vars_);
  Polynomial remainder = with_num_vars(n);
  Polynomial d = divisor.with_num_vars(n);
  Polynomial quotient(n);
  const Exponents& lead = d.leading_exponents();
  const Rational& lead_coef = d.leading_coefficient();
  while (!remainder.is_zero()) {
    Exponents e = remainder.leading_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < lead[i]) return std::nullopt;
      e[i] -= lead[i];
    }
    Rational c = remainder.leading_coefficient() / lead_coef;
    quotient.add_term(e, c);
    remainder -= d.times_monomial(e) * c;
  }
  return quotient;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ > num_vars_) *this = with_num_vars(other.num_vars_);
  for (const auto& [e, c] : other.terms_) add_term(padded(e), c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ > num_vars_) *this = with_num_vars(other.num_vars_);
  for (const auto& [e, c] : other.terms_) add_term(padded(e), -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.num_vars_, b.num_vars_);
  Polynomial out(n);
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = at(ea, i) + at(eb, i);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  GradedLexLess less;
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "T" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += coefficient_text(mag);
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += coefficient_text(mag) + "*" + mono;
    }
  }
  return s;
}

std::vector<std::string> Polynomial::to_terms() const {
  std::vector<std::string> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string s = it->second.to_string() + ":[";
    Exponents e = padded(it->first);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    out.push_back(s + "]");
  }
  return out;
}

Polynomial Polynomial::from_terms(const std::vector<std::string>& terms, std::size_t num_vars) {
  Polynomial p(num_vars);
  for (const auto& term : terms) {
    auto colon = term.find(':');
    if (colon == std::string::npos || term.size() < colon + 3 || term[colon + 1] != '[' || term.back() != ']')
      throw DomainError("malformed polynomial term '" + term + "'");
    Rational c = Rational::parse(std::string_view(term).substr(0, colon));
    std::string body = term.substr(colon + 2, term.size() - colon - 3);
    Exponents e;
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("malformed exponent in term '" + term + "'");
      e.push_back(static_cast<unsigned>(std::stoul(piece)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (e.size() != num_vars) throw DomainError("term '" + term + "' has wrong variable count");
    p.add_term(e, c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coefficient().inverse();
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.num_vars());
  unsigned d = p.degree_in(var);
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_recursive(g, c);
    if (g.is_constant()) return Polynomial(Rational(1), p.num_vars());
  }
  return g;
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
  auto q = p.divide_exact(d);
  if (!q) throw ConsistencyError("expected exact polynomial division");
  return *q;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, var));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Polynomial lead_b = b.coefficient_in(var, db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    unsigned dr = r.degree_in(var);
    Polynomial lead_r = r.coefficient_in(var, dr);
    Exponents shift(r.num_vars(), 0);
    shift[var] = dr - db;
    r = lead_b * r - lead_r * b.times_monomial(shift);
  }
  return r;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.num_vars();
  std::size_t var = n;
  for (std::size_t v = n; v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  }
  if (var == n) return Polynomial(Rational(1), n);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd_recursive(ca, cb);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_in(var) > 0) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  Polynomial g = pb.is_zero() ? primitive_part_in(pa, var) : Polynomial(Rational(1), n);
  return monic(c * g);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.num_vars(), b.num_vars());
  Polynomial x = a.with_num_vars(n);
  Polynomial y = b.with_num_vars(n);
  if (x.is_zero()) return monic(y);
  if (y.is_zero()) return monic(x);
  return monic(gcd_recursive(x, y));
}

}  // namespace tck
