// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepidem {

enum class Errc {
  associativity_violation,
  not_unital,
  degenerate_product,
  star_violation,
  no_block_presentation,
  not_invertible,
  algebra_mismatch,
  dimension_mismatch,
  not_full,
  no_solution,
  solution_not_unique,
  not_anti_multiplicative,
  not_multiplicative,
  not_bijective,
  centrality_violation,
  one_sided_condition_fails,
  intertwiner_condition_fails,
  transport_mismatch,
  not_faithful,
  kms_violation,
  not_a_trace,
  relative_commutation_fails,
  refused_for_mode,
  no_star_structure,
  gram_not_positive_definite,
  solution_space_dimension_not_one,
  reconstruction_mismatch,
  cross_block_leakage,
  normalization_violated,
  incompatible_components,
  inequality_violation,
  side_mismatch,
  precondition_failed,
};

std::string_view to_string(Errc code);

/// All kernel failures are reported through this one exception type; the code
/// identifies the violated contract and the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// One failing instance of an identity: the law's name and the basis indices
/// that exhibit the failure.
struct Witness {
  std::string law;
  std::vector<std::size_t> basis;
  std::string detail;

  std::string describe() const;
};

/// Outcome of an identity check. Only the first few witnesses are kept.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed = true;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;

  void fail(Witness w) {
    passed = false;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
  void merge(const CheckReport& other) {
    for (const auto& w : other.witnesses) fail(w);
    if (other.failures > other.witnesses.size()) {
      passed = false;
      failures += other.failures - other.witnesses.size();
    }
  }
  explicit operator bool() const { return passed; }
  std::string summary() const;
};

}  // namespace sepidem
