#pragma once

#include "aspherix/errors.hpp"
#include "aspherix/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aspherix {

/// Row-major rectangular grid.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T const& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  T const& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  [[nodiscard]] DenseMatrix transposed() const {
    DenseMatrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(DenseMatrix const&, DenseMatrix const&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;

template <Scalar S>
DenseMatrix<S> make_matrix(std::initializer_list<std::initializer_list<S>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  DenseMatrix<S> m(r, c, S(0));
  std::size_t i = 0;
  for (auto const& row : rows) {
    if (row.size() != c) throw ShapeError("ragged matrix literal");
    std::size_t j = 0;
    for (auto const& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c, Integer(0));
  std::size_t i = 0;
  for (auto const& row : rows) {
    if (row.size() != c) throw ShapeError("ragged matrix literal");
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

template <Scalar S>
DenseMatrix<S> identity_matrix(std::size_t n) {
  DenseMatrix<S> m(n, n, S(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <Scalar S>
DenseMatrix<S> operator*(DenseMatrix<S> const& a, DenseMatrix<S> const& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  DenseMatrix<S> c(a.rows(), b.cols(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <Scalar S>
DenseMatrix<S> operator+(DenseMatrix<S> a, DenseMatrix<S> const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <Scalar S>
bool is_zero_matrix(DenseMatrix<S> const& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <Scalar S>
S trace(DenseMatrix<S> const& m) {
  if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
  S t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(IntMatrix const& m) {
  if (!m.is_square()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace aspherix
