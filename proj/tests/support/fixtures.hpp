// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the unit suites.

#pragma once

#include <gtest/gtest.h>

#include <cstddef>
#include <string>

#include "sepidem/sepidem.hpp"

namespace sepidem::testing {

using Exact = GaussianRational;
using Backends = ::testing::Types<GaussianRational, Complex>;

inline GaussianRational q(long p, long d = 1) { return GaussianRational(mpq_class(p, d)); }
inline GaussianRational qi(long re, long im) { return GaussianRational(mpq_class(re), mpq_class(im)); }

template <Scalar F>
F cast(const GaussianRational& x) {
  return scalar_traits<F>::from_exact(x);
}

template <Scalar F>
Matrix<F> cast(const Matrix<GaussianRational>& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = cast<F>(m(i, j));
  return out;
}

/// Unit vector e_ij of M_n in the matrix-unit basis.
template <Scalar F>
Vec<F> matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Vec<F> v(n * n, F(0));
  v[i * n + j] = F(1);
  return v;
}

template <Scalar F>
::testing::AssertionResult close(const Vec<F>& a, const Vec<F>& b) {
  if (approx_equal(a, b)) return ::testing::AssertionSuccess();
  std::string msg = "vectors differ:";
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (!scalar_traits<F>::equal(a[k], b[k], std::max(1.0, std::max(max_abs(a), max_abs(b)))))
      msg += " [" + std::to_string(k) + "]";
  return ::testing::AssertionFailure() << msg;
}

template <Scalar F>
::testing::AssertionResult close(const Matrix<F>& a, const Matrix<F>& b) {
  if (approx_equal(a, b)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "matrices differ (" << a.rows() << "x" << a.cols() << " vs " << b.rows()
                                       << "x" << b.cols() << ")";
}

template <Scalar F>
::testing::AssertionResult close(const F& a, const F& b, double scale = 1.0) {
  if (scalar_traits<F>::equal(a, b, scale)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "scalars differ: " << a << " vs " << b;
}

/// Runs `body` and reports the error code it throws, if any.
template <class Body>
::testing::AssertionResult throws_code(Body&& body, Errc expected) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == expected) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << to_string(e.code()) << ": " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << to_string(expected);
}

}  // namespace sepidem::testing
