// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/errors.hpp"

#include <sstream>

namespace sepidem {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::associativity_violation: return "AssociativityViolation";
    case Errc::not_unital: return "NotUnital";
    case Errc::degenerate_product: return "DegenerateProduct";
    case Errc::star_violation: return "StarViolation";
    case Errc::no_block_presentation: return "NoBlockPresentation";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_full: return "NotFull";
    case Errc::no_solution: return "NoSolution";
    case Errc::solution_not_unique: return "SolutionNotUnique";
    case Errc::not_anti_multiplicative: return "NotAntiMultiplicative";
    case Errc::not_multiplicative: return "NotMultiplicative";
    case Errc::not_bijective: return "NotBijective";
    case Errc::centrality_violation: return "CentralityViolation";
    case Errc::one_sided_condition_fails: return "OneSidedConditionFails";
    case Errc::intertwiner_condition_fails: return "IntertwinerConditionFails";
    case Errc::transport_mismatch: return "TransportMismatch";
    case Errc::not_faithful: return "NotFaithful";
    case Errc::kms_violation: return "KMSViolation";
    case Errc::not_a_trace: return "NotATrace";
    case Errc::relative_commutation_fails: return "RelativeCommutationFails";
    case Errc::refused_for_mode: return "RefusedForMode";
    case Errc::no_star_structure: return "NoStarStructure";
    case Errc::gram_not_positive_definite: return "GramNotPositiveDefinite";
    case Errc::solution_space_dimension_not_one: return "SolutionSpaceDimensionNotOne";
    case Errc::reconstruction_mismatch: return "ReconstructionMismatch";
    case Errc::cross_block_leakage: return "CrossBlockLeakage";
    case Errc::normalization_violated: return "NormalizationViolated";
    case Errc::incompatible_components: return "IncompatibleComponents";
    case Errc::inequality_violation: return "InequalityViolation";
    case Errc::side_mismatch: return "SideMismatch";
    case Errc::precondition_failed: return "PreconditionFailed";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& detail) {
  std::string out(to_string(code));
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& detail) : std::runtime_error(compose(code, detail)), code_(code) {}

std::string Witness::describe() const {
  std::ostringstream os;
  os << law;
  if (!basis.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? "," : "") << basis[i];
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::string CheckReport::summary() const {
  if (passed) return "ok";
  std::ostringstream os;
  os << failures << " failure(s)";
  for (const auto& w : witnesses) os << "; " << w.describe();
  return os.str();
}

}  // namespace sepidem
