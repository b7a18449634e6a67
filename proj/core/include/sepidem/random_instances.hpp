// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random_instances.hpp
 * @brief Seeded generators of rational test data.
 *
 * Everything is drawn as exact Gaussian rationals and cast to the requested
 * backend, so a float run and an exact run with the same seed see the same
 * instance. Numerators lie in [-bound, bound], denominators in [1, bound].
 */

#pragma once

#include <cstdint>
#include <random>

#include "sepidem/algebra.hpp"

namespace sepidem {

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 9) : rng_(seed), bound_(bound) {}

  mpq_class rational();
  mpq_class nonzero_rational();
  /// Real rational, or with probability 1/2 a Gaussian rational when `complex`.
  GaussianRational scalar(bool complex = false);
  std::uint64_t raw() { return rng_(); }
  long bound() const { return bound_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

template <Scalar F>
Vec<F> random_element(const Algebra<F>& a, RationalSampler& rs, bool complex = false);

/// Rejection-sampled invertible n x n matrix.
template <Scalar F>
Matrix<F> random_invertible(std::size_t n, RationalSampler& rs, bool complex = false);

template <Scalar F>
struct TwistPair {
  Matrix<F> r;
  Matrix<F> s;
};

/// Invertible (r, s) with Tr(sr) rescaled to n.
template <Scalar F>
TwistPair<F> random_twist_pair(std::size_t n, RationalSampler& rs);

/// Diagonal invertible r with rational entries and sum |r_ii|^2 = n, drawn from
/// the rational points of the sphere through (1, ..., 1).
template <Scalar F>
Matrix<F> random_involutive_diagonal(std::size_t n, RationalSampler& rs);

/// Invertible real r with Tr(r^T r) = n, drawn from the rational points of the
/// sphere in R^{n^2} through the identity.
template <Scalar F>
Matrix<F> random_involutive(std::size_t n, RationalSampler& rs);

template <Scalar F>
F random_nonzero_scalar(RationalSampler& rs);

}  // namespace sepidem
