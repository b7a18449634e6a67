// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file duality.hpp
 * @brief Fourier transforms into the reduced duals, the E-pairing, dual
 * antipodes, dual involutions and the Plancherel form.
 *
 * Duals carry only linear, pairing and star structure. Equality of dual
 * elements is decided on covectors.
 */

#pragma once

#include <string_view>

#include "sepidem/integrals.hpp"
#include "sepidem/linalg.hpp"

namespace sepidem {

enum class DualSide {
  b_dual,   ///< functionals psi(b .) on B
  c_dual,   ///< functionals phi(. c) on C
};

std::string_view to_string(DualSide side);

template <Scalar F>
struct DualElement {
  DualSide side = DualSide::b_dual;
  Vec<F> representing;   ///< b or c
  Vec<F> covector;       ///< values on the basis of B or C

  /// Covector equality.
  bool same_as(const DualElement& o) const { return side == o.side && approx_equal(covector, o.covector); }
};

/// Dual-space operations over derived data. Caches the inverse antipodes and
/// the Gram matrices needed to recover representing elements.
template <Scalar F>
class DualContext {
 public:
  /// Throws not_faithful when either integral is degenerate.
  explicit DualContext(DerivedStructure<F> d);

  const DerivedStructure<F>& derived() const { return d_; }

  DualElement<F> fourier_b(const Vec<F>& b) const;
  DualElement<F> fourier_c(const Vec<F>& c) const;

  /// Rebuilds the representing element from a covector.
  DualElement<F> from_covector(DualSide side, const Vec<F>& covector) const;

  /// <E, b^ (x) c^>. Asserts agreement with phi(S'^-1(b) c) and psi(b S^-1(c)).
  /// Throws side_mismatch, reconstruction_mismatch.
  F pairing(const DualElement<F>& bhat, const DualElement<F>& chat) const;

  /// C-dual to B-dual: w -> w o S. B-dual to C-dual: w -> w o S'.
  /// Asserts (S^-1(c))^ and (S'^-1(b))^ as representing elements.
  DualElement<F> dual_antipode(const DualElement<F>& w) const;

  /// w*(x) = conj(w(T(x)*)) with T = S on B and T = S' on C; switches sides.
  /// Asserts w** = w and the representing elements (S'(c*))^ and (S(b*))^.
  /// Throws no_star_structure, precondition_failed when E is not self-adjoint,
  /// reconstruction_mismatch.
  DualElement<F> dual_star(const DualElement<F>& w) const;
  bool self_adjoint() const { return self_adjoint_; }

  /// <E, (c2^)* (x) c1^>; asserts equality with phi(c2* c1). Throws side_mismatch.
  F plancherel_form(const DualElement<F>& c1hat, const DualElement<F>& c2hat) const;

 private:
  DerivedStructure<F> d_;
  Matrix<F> s_inv_;
  Matrix<F> sp_inv_;
  Matrix<F> gram_b_inv_;   ///< inverse of psi(x_i x_j), transposed for recovery
  Matrix<F> gram_c_inv_;   ///< inverse of phi(y_i y_j)
  bool self_adjoint_ = false;
};

}  // namespace sepidem
