// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief Integrals, modular automorphisms and the trace correspondence.
 *
 * The left integral is the functional phi on C with (id (x) phi)E = 1, the
 * right integral the functional psi on B with (psi (x) id)E = 1. Both are
 * obtained from a homogeneous linear system whose solution space must be
 * one-dimensional; the closed forms of the construction families are never
 * used here.
 */

#pragma once

#include "sepidem/separability.hpp"

namespace sepidem {

/// Everything derived from a separability idempotent.
template <Scalar F>
struct DerivedStructure {
  TensorElement<F> e;
  LinearMap<F> antipode_bc;          ///< S: B -> C
  LinearMap<F> antipode_cb;          ///< S': C -> B
  LinearFunctional<F> left_integral; ///< phi on C
  LinearFunctional<F> right_integral;///< psi on B
  LinearMap<F> modular_c;            ///< sigma = S S' on C
  LinearMap<F> modular_b;            ///< sigma' = (S' S)^-1 on B
};

/// Requires a full idempotent; a square-zero input is refused with
/// refused_for_mode. Throws solution_space_dimension_not_one, no_solution, not_faithful.
template <Scalar F>
LinearFunctional<F> derive_left_integral(const TensorElement<F>& e);

template <Scalar F>
LinearFunctional<F> derive_right_integral(const TensorElement<F>& e);

template <Scalar F>
struct ModularPair {
  LinearMap<F> modular_c;
  LinearMap<F> modular_b;
};

/// Throws kms_violation when phi(c c') = phi(c' sigma(c)) or
/// psi(b b') = psi(b' sigma'(b)) fails on a basis pair.
template <Scalar F>
ModularPair<F> modular_automorphisms(const LinearMap<F>& s, const LinearMap<F>& sp, const LinearFunctional<F>& phi,
                                     const LinearFunctional<F>& psi);

/// KMS laws alone, as a report.
template <Scalar F>
CheckReport check_kms(const LinearFunctional<F>& phi, const LinearMap<F>& sigma, const LinearFunctional<F>& psi,
                      const LinearMap<F>& sigma_prime);

/// psi S' = phi, phi S = psi, phi (S S') = phi, psi (S' S) = psi.
template <Scalar F>
CheckReport check_integral_transport(const LinearFunctional<F>& phi, const LinearFunctional<F>& psi,
                                     const LinearMap<F>& s, const LinearMap<F>& sp);

/// Full derivation; throws if `e` is not a separability idempotent.
template <Scalar F>
DerivedStructure<F> derive_structure(const TensorElement<F>& e);

/// tau(xy) = tau(yx) on basis pairs.
template <Scalar F>
CheckReport check_tracial(const LinearFunctional<F>& tau);

/// q = (tau (x) id)E for a trace tau on B. Verifies c q = q sigma(c) and the
/// round trip tau = psi(S'(q) .). Throws not_a_trace, relative_commutation_fails,
/// reconstruction_mismatch.
template <Scalar F>
Element<F> q_from_trace(const DerivedStructure<F>& d, const LinearFunctional<F>& tau);

template <Scalar F>
struct TraceFromElement {
  LinearFunctional<F> trace;
  bool faithful = false;
  bool element_invertible = false;
};

/// tau = psi(S'(q) .) for q in C with c q = q sigma(c). Throws
/// relative_commutation_fails; throws not_faithful if faithfulness of tau and
/// invertibility of q disagree.
template <Scalar F>
TraceFromElement<F> trace_from_q(const DerivedStructure<F>& d, const Element<F>& q);

/// C-side mirror: p = (id (x) tau)E for a trace tau on C, with b p = p sigma'(b)
/// and tau = phi(. S(p)).
template <Scalar F>
Element<F> p_from_trace(const DerivedStructure<F>& d, const LinearFunctional<F>& tau);

template <Scalar F>
TraceFromElement<F> trace_from_p(const DerivedStructure<F>& d, const Element<F>& p);

namespace detail {

/// Integral solves without the idempotency precondition.
template <Scalar F>
LinearFunctional<F> solve_left_integral(const TensorElement<F>& e);
template <Scalar F>
LinearFunctional<F> solve_right_integral(const TensorElement<F>& e);

}  // namespace detail

}  // namespace sepidem
