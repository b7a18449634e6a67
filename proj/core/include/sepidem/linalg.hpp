// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Gaussian elimination over either scalar backend.
 *
 * Exact mode pivots on the first nonzero entry and never rounds. Float mode
 * uses partial pivoting and treats a pivot as zero below tol * ||M||_F.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepidem/matrix.hpp"

namespace sepidem {

template <Scalar F>
struct RowEchelon {
  Matrix<F> reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan reduction. Only the first `pivot_cols` columns are used as
/// pivot candidates (the rest are carried along as right-hand sides).
template <Scalar F>
RowEchelon<F> row_reduce(Matrix<F> m, std::optional<std::size_t> pivot_cols = std::nullopt);

template <Scalar F>
std::size_t rank(const Matrix<F>& m);

/// Basis of {x : m x = 0}, one column per free variable.
template <Scalar F>
Matrix<F> nullspace(const Matrix<F>& m);

/// A maximal linearly independent subset of the columns of m (in order).
template <Scalar F>
Matrix<F> column_basis(const Matrix<F>& m);

template <Scalar F>
struct LinearSolution {
  Matrix<F> particular;            ///< one solution per right-hand side (free variables set to 0)
  std::vector<bool> consistent;    ///< per right-hand side
  std::size_t nullity = 0;         ///< dimension of the homogeneous solution space

  bool all_consistent() const;
};

/// Solves a x = b for every column of b simultaneously.
template <Scalar F>
LinearSolution<F> solve(const Matrix<F>& a, const Matrix<F>& b);

template <Scalar F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

template <Scalar F>
struct PsdResult {
  bool hermitian = true;
  bool positive_semidefinite = false;
  std::size_t rank = 0;
  std::optional<std::size_t> witness;   ///< index where positivity fails
};

/// Positive semidefiniteness of a Hermitian matrix. Exact mode runs symmetric
/// Gaussian pivoting (every pivot must be >= 0 and a zero diagonal forces a
/// zero row); float mode checks eigenvalues against -tol * max(1, ||G||).
template <Scalar F>
PsdResult<F> psd_test(const Matrix<F>& g);

}  // namespace sepidem
