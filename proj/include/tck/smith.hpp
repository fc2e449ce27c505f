#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tck {

// Integer matrix, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  // Throws DomainError on ragged input.
  static IntegerMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix minus_identity() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;  // "[[a,b],[c,d]]"

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b);

// Fraction-free (Bareiss) determinant.
mpz_class determinant(const IntegerMatrix& m);

struct SmithForm {
  std::vector<mpz_class> diagonal;  // d_1 | d_2 | ..., min(rows, cols) entries, all >= 0
  IntegerMatrix u;                  // rows x rows, unimodular
  IntegerMatrix v;                  // cols x cols, unimodular
};

// U M V = diag(d).
SmithForm smith_normal_form(const IntegerMatrix& m);

// Some integer x with A x = b, if one exists.
std::optional<std::vector<mpz_class>> solve_integer_system(const IntegerMatrix& a, const std::vector<mpz_class>& b);

}  // namespace tck
