#pragma once

#include <cstddef>
#include <vector>

#include "coxsig/quad.hpp"

namespace coxsig {

/// Small dense square/rectangular matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.v_ == y.v_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& a = x(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += a * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.v_.size(); ++i) r.v_[i] = x.v_[i] + y.v_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  const std::vector<T>& data() const { return v_; }
  std::vector<T>& data() { return v_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> v_;
};

using QMatrix = Matrix<QuadScalar>;

/// Exact determinant by Gaussian elimination with division (field scalars).
QuadScalar det(QMatrix m);

/// Exact inverse; throws domain_error when singular.
QMatrix inverse(QMatrix m);

/// Solve m x = rhs column-wise (m square invertible).
QMatrix solve(QMatrix m, QMatrix rhs);

QuadScalar trace(const QMatrix& m);

}  // namespace coxsig
