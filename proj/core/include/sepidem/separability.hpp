// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file separability.hpp
 * @brief Axiom verification and derivation of the two anti-isomorphisms.
 *
 * Naming: the antipode B -> C is the map S with E(b (x) 1) = E(1 (x) S(b));
 * the antipode C -> B is the map S' with (1 (x) c)E = (S'(c) (x) 1)E.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepidem/tensor.hpp"

namespace sepidem {

enum class IdempotencyKind { idempotent, scalar_multiple, nilpotent_square_zero, other };

std::string_view to_string(IdempotencyKind kind);

template <Scalar F>
struct IdempotencyVerdict {
  IdempotencyKind kind = IdempotencyKind::other;
  std::optional<F> lambda;   ///< E^2 = lambda E, when such a scalar exists
  std::string witness;
};

template <Scalar F>
IdempotencyVerdict<F> verify_idempotent(const TensorElement<F>& e);

/// S: B -> C. Requires fullness (throws not_full); throws no_solution when
/// E(b (x) 1) lies outside E(1 (x) C) for some basis b.
template <Scalar F>
LinearMap<F> derive_antipode_bc(const TensorElement<F>& e);

/// S': C -> B, mirror of derive_antipode_bc.
template <Scalar F>
LinearMap<F> derive_antipode_cb(const TensorElement<F>& e);

/// Which absorption law is taken as given.
enum class Absorption {
  c_side,   ///< (1 (x) c)E = (S'(c) (x) 1)E; the B -> C antipode is recovered
  b_side,   ///< E(b (x) 1) = E(1 (x) S(b)); the C -> B antipode is recovered
};

/// Recovers the opposite antipode from one absorption law plus fullness and
/// idempotency, checks that it satisfies the other law (one_sided_condition_fails
/// otherwise) and that it coincides with the direct derivation.
template <Scalar F>
LinearMap<F> derive_one_sided(const TensorElement<F>& e, Absorption given);

/// m_C(S (x) id)(E(1 (x) c)) = c and m_B(id (x) S')((b (x) 1)E) = b on all basis elements.
template <Scalar F>
CheckReport counit_identities(const TensorElement<F>& e, const LinearMap<F>& s, const LinearMap<F>& sp);

/// e = m_C(S (x) id)E; throws centrality_violation if e is not central.
template <Scalar F>
Element<F> central_element(const TensorElement<F>& e, const LinearMap<F>& s);

/// (S (x) S')E flipped back into B (x) C equals E.
template <Scalar F>
CheckReport swap_identity(const TensorElement<F>& e, const LinearMap<F>& s, const LinearMap<F>& sp);

/// With gamma(c) = E(1 (x) c): m(gamma(c)) = c for m(b (x) c) = S(b)c, and
/// gamma(S(b) x c) = gamma(x)(b (x) c) on all basis triples.
template <Scalar F>
CheckReport splitting_check(const TensorElement<F>& e, const LinearMap<F>& s);

struct DeterminacyResult {
  bool applicable = false;      ///< antipodes of both elements agree
  bool elements_equal = false;
  bool ef_equals_e = false;
  bool ef_equals_f = false;
  bool passed = false;          ///< vacuously true when not applicable
};

template <Scalar F>
DeterminacyResult determinacy_check(const TensorElement<F>& e, const TensorElement<F>& f);

/// Given alpha_B intertwining S'_2 S_2 and S'_1 S_1, builds alpha_C with
/// S'_2 alpha_C = alpha_B S'_1 and checks E_2 = (alpha_B (x) alpha_C)E_1.
template <Scalar F>
LinearMap<F> conjugacy_transport(const TensorElement<F>& e1, const TensorElement<F>& e2,
                                 const LinearMap<F>& alpha_b);

enum class CertificateMode { separability_idempotent, nilpotent_variant, rejected };

std::string_view to_string(CertificateMode mode);

template <Scalar F>
struct SeparabilityCertificate {
  CertificateMode mode = CertificateMode::rejected;
  std::string reason;

  bool regular = true;   // automatic in finite dimension
  bool full = false;
  IdempotencyVerdict<F> idempotency;
  bool absorption_b_side = false;
  bool absorption_c_side = false;

  std::optional<LinearMap<F>> antipode_bc;
  std::optional<LinearMap<F>> antipode_cb;
  std::optional<Element<F>> central;

  CheckReport counit;
  CheckReport centrality;
  CheckReport swap;
  CheckReport splitting;
  CheckReport determinacy;

  std::optional<LinearFunctional<F>> left_integral;
  std::optional<LinearFunctional<F>> right_integral;
  std::optional<LinearMap<F>> modular_c;
  std::optional<LinearMap<F>> modular_b;
  CheckReport integrals;

  std::vector<std::string> notes;
};

struct CertifyOptions {
  bool derive_integrals = true;
};

/// Runs the full pipeline. Never throws for mathematical failures; they are
/// recorded in the certificate.
template <Scalar F>
SeparabilityCertificate<F> certify(const TensorElement<F>& e, CertifyOptions options = {});

}  // namespace sepidem
