// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file star.hpp
 * @brief Involutive structure: self-adjointness, positivity, GNS data and
 * the block decomposition of self-adjoint separability idempotents.
 *
 * Star checks report rather than refuse on instances whose integrals are
 * not positive.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "sepidem/integrals.hpp"
#include "sepidem/linalg.hpp"

namespace sepidem {

/// E* = E for the componentwise star. Throws no_star_structure.
template <Scalar F>
CheckReport check_self_adjoint(const TensorElement<F>& e);

/// S'(S(b)*)* = b and S(S'(c)*)* = c on all basis elements.
template <Scalar F>
CheckReport check_star_antipode(const LinearMap<F>& s, const LinearMap<F>& sp);

/// f(x*) = conj(f(x)) on the basis, and m(x*) = (m^-1(x))* for the modular map m.
template <Scalar F>
CheckReport check_integral_star(const LinearFunctional<F>& f, const LinearMap<F>& modular);

template <Scalar F>
struct PositivityResult {
  Matrix<F> gram;   ///< G(i, j) = f(x_i* x_j)
  PsdResult<F> psd;

  bool positive() const { return psd.hermitian && psd.positive_semidefinite; }
};

template <Scalar F>
PositivityResult<F> check_positive(const LinearFunctional<F>& f);

/// psi(b* b) = phi(S(b)* S(b)) on the basis and on `extra` elements of B.
template <Scalar F>
CheckReport check_positivity_transfer(const DerivedStructure<F>& d, const std::vector<Vec<F>>& extra = {});

/// phi(c* c1* c1 c) <= phi(c1 c1*) phi(c* c) and the B-side analogue with psi,
/// on `samples` random pairs (plus c1 = 0). Failures carry inequality_violation witnesses.
template <Scalar F>
CheckReport check_cauchy_bound(const DerivedStructure<F>& d, std::size_t samples, std::uint64_t seed);

template <Scalar F>
struct GnsData {
  Matrix<F> gram;                     ///< G(i, j) = f(x_i* x_j)
  std::vector<Matrix<F>> operators;   ///< left multiplication by each basis element
  CheckReport adjoint_law;            ///< G pi(x*) = pi(x)^H G
  CheckReport norm_bound;             ///< |pi(x) L(y)|^2 <= f(x x*) |L(y)|^2
};

/// Throws gram_not_positive_definite unless f is positive and faithful.
template <Scalar F>
GnsData<F> gns_data(const LinearFunctional<F>& f, std::size_t samples, std::uint64_t seed);

/// E = (r (x) 1) E0 (s (x) 1) on M_n (x) M_n.
template <Scalar F>
struct TwistData {
  std::size_t n = 0;
  Matrix<F> r;
  Matrix<F> s;
};

/// Solves S'(S0(b)) r = r b and S0(S(b)) s = s b. Gauge: the first nonzero
/// entry of r is 1 and Tr(sr) = n (when Tr(sr) = 0 the scale of s is fitted
/// to E). Throws precondition_failed, solution_space_dimension_not_one,
/// reconstruction_mismatch.
template <Scalar F>
TwistData<F> recover_twist(const TensorElement<F>& e);

template <Scalar F>
struct BlockData {
  std::size_t index = 0;
  std::size_t size = 0;
  TensorElement<F> component;
  SeparabilityCertificate<F> certificate;
  TwistData<F> twist;
};

/// Splits a block-diagonal E over aligned multi-matrix presentations, certifies
/// each block concurrently, recovers its twist, and checks that the global
/// derived data restricts block-wise. Throws cross_block_leakage,
/// precondition_failed, reconstruction_mismatch.
template <Scalar F>
std::vector<BlockData<F>> decompose_blocks(const TensorElement<F>& e);

}  // namespace sepidem
