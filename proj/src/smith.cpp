#include "tck/smith.hpp"

#include <utility>

#include "tck/error.hpp"

namespace tck {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::minus_identity() const {
  if (!is_square()) throw DomainError("M - I needs a square matrix");
  IntegerMatrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m(i, i) -= 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not match for product");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Reducer {
  IntegerMatrix a, u, v;
  std::size_t r, c;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
  }
  // row i -= q * row j
  void sub_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t k = 0; k < c; ++k) a(i, k) -= q * a(j, k);
    for (std::size_t k = 0; k < r; ++k) u(i, k) -= q * u(j, k);
  }
  void sub_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t k = 0; k < r; ++k) a(k, i) -= q * a(k, j);
    for (std::size_t k = 0; k < c; ++k) v(k, i) -= q * v(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < r; ++k) u(i, k) = -u(i, k);
  }
  void add_row(std::size_t i, std::size_t j) { sub_row(i, j, -1); }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer red{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), m.rows(), m.cols()};
  std::size_t n = std::min(red.r, red.c);
  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: nonzero entry of least absolute value in the trailing block.
    while (true) {
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < red.r; ++i)
        for (std::size_t j = t; j < red.c; ++j) {
          if (red.a(i, j) == 0) continue;
          if (!found || abs(red.a(i, j)) < abs(red.a(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      red.swap_rows(t, pi);
      red.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < red.r; ++i) {
        if (red.a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), red.a(i, t).get_mpz_t(), red.a(t, t).get_mpz_t());
        red.sub_row(i, t, q);
        if (red.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < red.c; ++j) {
        if (red.a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), red.a(t, j).get_mpz_t(), red.a(t, t).get_mpz_t());
        red.sub_col(j, t, q);
        if (red.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row carrying a non-multiple into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < red.r && divides; ++i)
        for (std::size_t j = t + 1; j < red.c && divides; ++j)
          if (!mpz_divisible_p(red.a(i, j).get_mpz_t(), red.a(t, t).get_mpz_t())) {
            red.add_row(t, i);
            divides = false;
          }
      if (divides) break;
    }
    if (red.a(t, t) < 0) red.negate_row(t);
  }
  SmithForm out;
  for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(red.a(t, t));
  out.u = std::move(red.u);
  out.v = std::move(red.v);
  return out;
}

std::optional<std::vector<mpz_class>> solve_integer_system(const IntegerMatrix& a, const std::vector<mpz_class>& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  SmithForm s = smith_normal_form(a);
  // D y = U b, x = V y
  std::vector<mpz_class> ub(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) ub[i] += s.u(i, k) * b[k];
  std::vector<mpz_class> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class d = i < s.diagonal.size() ? s.diagonal[i] : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[i] = ub[i] / d;
  }
  std::vector<mpz_class> x(a.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) x[i] += s.v(i, k) * y[k];
  return x;
}

}  // namespace tck
