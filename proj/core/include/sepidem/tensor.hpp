// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor.hpp
 * @brief Elements of B (x) C stored as dim(B) x dim(C) coefficient matrices.
 *
 * With X the coefficient matrix of E, L_x / R_x the left / right
 * multiplication matrices, the one-sided products are
 *   (x (x) 1)E = L_x X      E(x (x) 1) = R_x X
 *   (1 (x) y)E = X L_y^T    E(1 (x) y) = X R_y^T.
 */

#pragma once

#include <cstddef>

#include "sepidem/algebra.hpp"

namespace sepidem {

template <Scalar F>
struct TensorElement {
  Algebra<F> left;
  Algebra<F> right;
  Matrix<F> coeffs;

  bool operator==(const TensorElement& o) const {
    return left.same_as(o.left) && right.same_as(o.right) && approx_equal(coeffs, o.coeffs);
  }
};

/// Throws dimension_mismatch when the matrix shape disagrees with the algebras.
template <Scalar F>
TensorElement<F> make_tensor(const Algebra<F>& b, const Algebra<F>& c, Matrix<F> coeffs);

template <Scalar F>
TensorElement<F> simple_tensor(const Element<F>& b, const Element<F>& c);

/// Linearly independent spanning vectors of a subspace of an algebra.
template <Scalar F>
struct Subspace {
  Algebra<F> algebra;
  Matrix<F> basis;   ///< one column per spanning vector

  std::size_t dim() const { return basis.cols(); }
};

template <Scalar F>
TensorElement<F> tensor_mul(const TensorElement<F>& x, const TensorElement<F>& y);

template <Scalar F>
Subspace<F> left_leg(const TensorElement<F>& e);

template <Scalar F>
Subspace<F> right_leg(const TensorElement<F>& e);

template <Scalar F>
bool is_full(const TensorElement<F>& e);

/// (omega (x) id)E, an element of C.
template <Scalar F>
Element<F> slice_left(const LinearFunctional<F>& omega, const TensorElement<F>& e);

/// (id (x) omega)E, an element of B.
template <Scalar F>
Element<F> slice_right(const TensorElement<F>& e, const LinearFunctional<F>& omega);

enum class Placement {
  b_on_left,    ///< (x (x) 1)E
  b_on_right,   ///< E(x (x) 1)
  c_on_left,    ///< (1 (x) x)E
  c_on_right,   ///< E(1 (x) x)
};

template <Scalar F>
TensorElement<F> mult_sided(const TensorElement<F>& e, Placement where, const Element<F>& x);

/// Flip of (f (x) g)E back into B (x) C, for f: B -> C and g: C -> B.
template <Scalar F>
TensorElement<F> swap_and_map(const TensorElement<F>& e, const LinearMap<F>& f, const LinearMap<F>& g);

}  // namespace sepidem
