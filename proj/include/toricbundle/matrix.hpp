#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "toricbundle/errors.hpp"
#include "toricbundle/rational.hpp"

namespace toricbundle {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Row-major flattening.
  const std::vector<T>& flat() const noexcept { return data_; }

  static Matrix from_flat(std::size_t rows, std::size_t cols, std::vector<T> values) {
    if (values.size() != rows * cols) throw DimensionMismatch("flat data does not match shape");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(values);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using QMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum: shapes differ");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference: shapes differ");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

QMatrix to_rational(const IntMatrix& m);

/// Exact conversion; throws InputError when an entry is not an int64 integer.
IntMatrix to_integer(const QMatrix& m);

QMatrix matrix_product(const QMatrix& a, const QMatrix& b);

Rational determinant(const QMatrix& a);

/// Throws SingularMatrix for singular input, DimensionMismatch for non-square input.
QMatrix rational_inverse(const QMatrix& a);

std::size_t rank(const QMatrix& a);

Rational trace(const QMatrix& a);

using RationalVector = std::vector<Rational>;

/// Reduced row echelon form of the given rows with zero rows dropped; pivots are 1.
/// Canonical: two row sets span the same space iff their results are equal.
std::vector<RationalVector> reduced_echelon(std::vector<RationalVector> rows, std::size_t width);

/// Basis of the right null space {x : A x = 0}, in reduced echelon form.
std::vector<RationalVector> kernel_basis(const QMatrix& a);

/// Diagonal matrix with the given entries.
QMatrix diagonal(std::span<const Rational> entries);

/// Unit matrix E_ij of the given size.
QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j);

std::string to_string(const QMatrix& m);

}  // namespace toricbundle
