// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace sepidem {

namespace {

template <Scalar F>
double frobenius(const Matrix<F>& m) {
  double s = 0.0;
  for (const auto& x : m.data()) {
    const double a = scalar_traits<F>::magnitude(x);
    s += a * a;
  }
  return std::sqrt(s);
}

}  // namespace

template <Scalar F>
bool LinearSolution<F>::all_consistent() const {
  for (bool c : consistent)
    if (!c) return false;
  return true;
}

template <Scalar F>
RowEchelon<F> row_reduce(Matrix<F> m, std::optional<std::size_t> pivot_cols) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t limit = pivot_cols.value_or(cols);
  const double threshold = scalar_traits<F>::exact ? 0.0 : float_tolerance() * frobenius(m);

  RowEchelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t pivot = rows;
    if constexpr (scalar_traits<F>::exact) {
      for (std::size_t i = r; i < rows; ++i) {
        if (!literally_zero(m(i, c))) {
          pivot = i;
          break;
        }
      }
    } else {
      double best = threshold;
      for (std::size_t i = r; i < rows; ++i) {
        const double a = std::abs(m(i, c));
        if (a > best) {
          best = a;
          pivot = i;
        }
      }
    }
    if (pivot == rows) {
      if constexpr (!scalar_traits<F>::exact) {
        for (std::size_t i = r; i < rows; ++i) m(i, c) = F(0);
      }
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    }
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!literally_zero(m(r, j))) m(r, j) *= inv;
    }
    m(r, c) = F(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || literally_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (literally_zero(m(r, j))) continue;
        m(i, j) -= factor * m(r, j);
      }
      m(i, c) = F(0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <Scalar F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

template <Scalar F>
Matrix<F> nullspace(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(n, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix<F>::from_columns(n, basis);
}

template <Scalar F>
Matrix<F> column_basis(const Matrix<F>& m) {
  const auto ech = row_reduce(m);
  std::vector<Vec<F>> cols;
  cols.reserve(ech.pivots.size());
  for (auto p : ech.pivots) cols.push_back(m.column(p));
  return Matrix<F>::from_columns(m.rows(), cols);
}

template <Scalar F>
LinearSolution<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix<F> aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const auto ech = row_reduce(std::move(aug), n);
  const std::size_t rk = ech.pivots.size();

  LinearSolution<F> out;
  out.nullity = n - rk;
  out.particular = Matrix<F>(n, k);
  out.consistent.assign(k, true);
  const double scale = scalar_traits<F>::exact ? 1.0 : std::max(1.0, b.max_abs());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = rk; i < ech.reduced.rows(); ++i) {
      if (!scalar_traits<F>::is_zero(ech.reduced(i, n + j), scale)) {
        out.consistent[j] = false;
        break;
      }
    }
    for (std::size_t r = 0; r < rk; ++r) out.particular(ech.pivots[r], j) = ech.reduced(r, n + j);
  }
  return out;
}

template <Scalar F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto sol = solve(m, Matrix<F>::identity(m.rows()));
  if (sol.nullity != 0 || !sol.all_consistent()) return std::nullopt;
  return std::move(sol.particular);
}

template <Scalar F>
PsdResult<F> psd_test(const Matrix<F>& g) {
  PsdResult<F> out;
  const std::size_t n = g.rows();
  if (n != g.cols() || !approx_equal(g, g.adjoint())) {
    out.hermitian = false;
    return out;
  }

  if constexpr (scalar_traits<F>::exact) {
    Matrix<F> w = g;
    std::vector<bool> active(n, true);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pivot = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        const int s = scalar_traits<F>::real_sign(w(i, i));
        if (s < 0) {
          out.witness = i;
          return out;
        }
        if (s > 0 && pivot == n) pivot = i;
      }
      if (pivot == n) {
        // Remaining diagonal is zero: PSD forces the whole remaining block to vanish.
        for (std::size_t i = 0; i < n; ++i) {
          if (!active[i]) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (active[j] && !literally_zero(w(i, j))) {
              out.witness = i;
              return out;
            }
          }
        }
        break;
      }
      active[pivot] = false;
      ++out.rank;
      const F inv = F(1) / w(pivot, pivot);
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || literally_zero(w(i, pivot))) continue;
        const F factor = w(i, pivot) * inv;
        for (std::size_t j = 0; j < n; ++j) {
          if (!active[j] || literally_zero(w(pivot, j))) continue;
          w(i, j) -= factor * w(pivot, j);
        }
      }
    }
    out.positive_semidefinite = true;
    return out;
  } else {
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double bound = float_tolerance() * std::max(1.0, g.max_abs() * static_cast<double>(n));
    out.positive_semidefinite = true;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < -bound) {
        out.positive_semidefinite = false;
        out.witness = static_cast<std::size_t>(i);
      } else if (ev(i) > bound) {
        ++out.rank;
      }
    }
    return out;
  }
}

#define SEPIDEM_INSTANTIATE_LINALG(F)                                                            \
  template struct LinearSolution<F>;                                                             \
  template RowEchelon<F> row_reduce<F>(Matrix<F>, std::optional<std::size_t>);                   \
  template std::size_t rank<F>(const Matrix<F>&);                                                \
  template Matrix<F> nullspace<F>(const Matrix<F>&);                                             \
  template Matrix<F> column_basis<F>(const Matrix<F>&);                                          \
  template LinearSolution<F> solve<F>(const Matrix<F>&, const Matrix<F>&);                       \
  template std::optional<Matrix<F>> inverse<F>(const Matrix<F>&);                                \
  template PsdResult<F> psd_test<F>(const Matrix<F>&);

SEPIDEM_INSTANTIATE_LINALG(GaussianRational)
SEPIDEM_INSTANTIATE_LINALG(Complex)

}  // namespace sepidem
