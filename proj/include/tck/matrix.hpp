#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tck/error.hpp"

namespace tck {

namespace detail {
template <class T>
bool entry_zero(const T& x) {
  return is_zero(x);  // found by argument-dependent lookup
}
}  // namespace detail

// Dense row-major matrix over an exact field T. T must be constructible from
// int and provide arithmetic, == and a free is_zero(const T&).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::entry_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == T(i == j ? 1 : 0))) return false;
    return true;
  }

  bool is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !detail::entry_zero((*this)(i, j))) return false;
    return true;
  }

  std::vector<T> diagonal_entries() const {
    std::vector<T> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not match for product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (detail::entry_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (detail::entry_zero(y)) continue;
          out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Gauss-Jordan; throws DomainError when singular.
  Matrix inverse() const {
    if (!is_square()) throw DomainError("inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && detail::entry_zero(a(pivot, col))) ++pivot;
      if (pivot == n) throw DomainError("matrix is singular");
      if (pivot != col) {
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
      }
      T scale = T(1) / a(col, col);
      a.scale_row(col, scale);
      inv.scale_row(col, scale);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || detail::entry_zero(a(r, col))) continue;
        T f = a(r, col);
        a.add_row_multiple(r, col, f);
        inv.add_row_multiple(r, col, f);
      }
    }
    return inv;
  }

  T determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this;
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && detail::entry_zero(a(pivot, col))) ++pivot;
      if (pivot == n) return T(0);
      if (pivot != col) {
        a.swap_rows(pivot, col);
        det = T(0) - det;
      }
      det = det * a(col, col);
      T inv = T(1) / a(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (detail::entry_zero(a(r, col))) continue;
        a.add_row_multiple(r, col, a(r, col) * inv);
      }
    }
    return det;
  }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimensions do not match");
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void scale_row(std::size_t r, const T& s) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!detail::entry_zero((*this)(r, j))) (*this)(r, j) = (*this)(r, j) * s;
  }
  // row r -= f * row src
  void add_row_multiple(std::size_t r, std::size_t src, const T& f) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!detail::entry_zero((*this)(src, j))) (*this)(r, j) -= f * (*this)(src, j);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

template <class T>
std::vector<std::vector<std::string>> to_string_rows(const Matrix<T>& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j).to_string());
  return rows;
}

}  // namespace tck
