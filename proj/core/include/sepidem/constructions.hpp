// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file constructions.hpp
 * @brief Generators for the standard families of separability idempotents.
 *
 * All families live on M_n (x) M_n with the matrix-unit basis e_ij at index
 * i*n + j. The canonical element is E0 = (1/n) sum_ij e_ij (x) e_ij and the
 * twisted family is (r (x) 1) E0 (s (x) 1), whose coefficient on
 * (e_ab, e_ij) is r_ai s_jb / n.
 */

#pragma once

#include <vector>

#include "sepidem/tensor.hpp"

namespace sepidem {

template <Scalar F>
TensorElement<F> make_canonical_idempotent(std::size_t n);

/// Coefficients of (r (x) 1) E0 (s (x) 1).
template <Scalar F>
Matrix<F> twisted_coefficients(const Matrix<F>& r, const Matrix<F>& s);

/// Throws not_invertible. With `normalize`, s is rescaled so that Tr(sr) = n
/// whenever Tr(sr) != 0.
template <Scalar F>
TensorElement<F> make_twisted(const Matrix<F>& r, const Matrix<F>& s, bool normalize);

/// Closed-form data of a twisted instance with Tr(sr) = n.
template <Scalar F>
struct ClosedForms {
  Matrix<F> p;   ///< (rs)^-1
  Matrix<F> q;   ///< transpose of (sr)^-1
  LinearMap<F> antipode_bc;         ///< b -> transpose(s b s^-1)
  LinearMap<F> antipode_cb;         ///< c -> r transpose(c) r^-1
  LinearFunctional<F> left_integral;  ///< n Tr(q .)
  LinearFunctional<F> right_integral; ///< n Tr(p .)
  LinearMap<F> modular_c;           ///< c -> q c q^-1
  LinearMap<F> modular_b;           ///< b -> p b p^-1
};

template <Scalar F>
ClosedForms<F> twisted_closed_forms(const Matrix<F>& r, const Matrix<F>& s);

template <Scalar F>
struct InvolutiveInstance {
  TensorElement<F> e;
  Matrix<F> r;
  ClosedForms<F> closed;
};

/// E = (r (x) 1) E0 (r* (x) 1). Tr(r* r) = n is checked, never imposed:
/// throws normalization_violated or not_invertible.
template <Scalar F>
InvolutiveInstance<F> make_involutive_twisted(const Matrix<F>& r);

/// Block-diagonal element over the direct sums of the component algebras.
/// Each component must be full, with both antipodes derivable, and either
/// idempotent or square-zero; throws incompatible_components otherwise.
template <Scalar F>
TensorElement<F> make_direct_sum_element(const std::vector<TensorElement<F>>& components);

/// sum_i e_i1 (x) e_i1: idempotent, one-sided absorbing, not full. Requires n >= 2.
template <Scalar F>
TensorElement<F> make_nonfull_counterexample(std::size_t n);

/// Row-major n x n matrix as an element of M_n, and back.
template <Scalar F>
Vec<F> matrix_to_coeffs(const Matrix<F>& m);

template <Scalar F>
Matrix<F> coeffs_to_matrix(const Vec<F>& v, std::size_t n);

}  // namespace sepidem
