// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "sepidem/scalar.hpp"

namespace sepidem {

/// Coefficient vector relative to a fixed basis.
template <Scalar F>
using Vec = std::vector<F>;

/// Dense row-major matrix. Products skip zero entries, which keeps the
/// (typically very sparse) structure-constant computations cheap.
template <Scalar F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vec<F>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec<F> column(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_column(std::size_t j, const Vec<F>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  const std::vector<F>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose.
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = scalar_traits<F>::conj((*this)(i, j));
    return t;
  }

  Matrix conjugate() const {
    Matrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = scalar_traits<F>::conj(data_[k]);
    return t;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_traits<F>::is_zero(x)) return false;
    return true;
  }

  /// Largest entry magnitude (as double); used to scale float comparisons.
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, scalar_traits<F>::magnitude(x));
    return m;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec<F> out(rows_, F(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (literally_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const F& a = (*this)(i, j);
        if (literally_zero(a)) continue;
        out[i] += a * v[j];
      }
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (literally_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (literally_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  /// Literal entrywise equality; use approx_equal for backend-aware comparison.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Exact: literal equality. Float: entrywise, relative to the larger operand norm.
template <Scalar F>
bool approx_equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (scalar_traits<F>::exact) {
    return a == b;
  } else {
    const double scale = std::max(a.max_abs(), b.max_abs());
    for (std::size_t k = 0; k < a.data().size(); ++k)
      if (!scalar_traits<F>::equal(a.data()[k], b.data()[k], scale)) return false;
    return true;
  }
}

template <Scalar F>
double max_abs(const Vec<F>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, scalar_traits<F>::magnitude(x));
  return m;
}

template <Scalar F>
bool approx_equal(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  if constexpr (scalar_traits<F>::exact) {
    return a == b;
  } else {
    const double scale = std::max(max_abs(a), max_abs(b));
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!scalar_traits<F>::equal(a[k], b[k], scale)) return false;
    return true;
  }
}

template <Scalar F>
bool is_zero_vector(const Vec<F>& v, double scale = 1.0) {
  for (const auto& x : v)
    if (!scalar_traits<F>::is_zero(x, scale)) return false;
  return true;
}

template <Scalar F>
Vec<F> operator+(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

template <Scalar F>
Vec<F> operator-(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <Scalar F>
Vec<F> scaled(Vec<F> a, const F& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <Scalar F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  F s(0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (literally_zero(a[k]) || literally_zero(b[k])) continue;
    s += a[k] * b[k];
  }
  return s;
}

template <Scalar F>
Matrix<F> cast_matrix(const Matrix<GaussianRational>& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<F>(m(i, j));
  return out;
}

template <Scalar F>
Vec<F> cast_vector(const Vec<GaussianRational>& v) {
  Vec<F> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar_cast<F>(x));
  return out;
}

}  // namespace sepidem
