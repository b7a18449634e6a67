// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

// Instance descriptions and certificate documents as JSON.
//
// Exact scalars are written as "p/q" strings when real and as two-element
// arrays of such strings otherwise. Float scalars are JSON numbers or
// [re, im] pairs. Readers accept every form in either mode.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sepidem/sepidem.hpp"

namespace sepidem::cli {

using json = nlohmann::json;

/// Malformed input. `where` is a JSON pointer or "line L, column C".
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class ScalarMode { exact, float64 };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);   // "exact", "float" or "float64"

using ExactMatrix = Matrix<GaussianRational>;
using ExactVec = Vec<GaussianRational>;

struct StructureSpec {
  std::size_t dim = 0;
  std::vector<StructureEntry<GaussianRational>> constants;
  ExactVec unit;
  std::optional<ExactMatrix> star;
  std::vector<std::string> labels;
};

/// Either a multi-matrix presentation (`blocks`) or structure constants.
struct AlgebraSpec {
  std::vector<std::size_t> blocks;
  bool star = true;
  std::optional<StructureSpec> structure;
};

struct ConstructionSpec {
  std::string kind;   ///< E0, twisted, involutive_twisted, direct_sum, nonfull
  std::size_t n = 0;
  ExactMatrix r;
  ExactMatrix s;
  bool normalize = false;
  std::vector<ConstructionSpec> components;
};

struct InstanceDescription {
  ScalarMode mode = ScalarMode::exact;
  std::optional<double> tolerance;
  std::optional<AlgebraSpec> left;
  std::optional<AlgebraSpec> right;
  std::optional<ExactMatrix> coefficients;
  std::optional<ConstructionSpec> construction;
};

json encode_scalar(const GaussianRational& x);
json encode_scalar(const Complex& x);
/// Throws InputError at `where`.
GaussianRational decode_exact(const json& j, const std::string& where);

template <Scalar F>
json encode_matrix(const Matrix<F>& m);
template <Scalar F>
json encode_vector(const Vec<F>& v);
template <Scalar F>
Matrix<F> decode_matrix(const json& j, const std::string& where);
template <Scalar F>
Vec<F> decode_vector(const json& j, const std::string& where);

InstanceDescription parse_instance(std::string_view text);
InstanceDescription instance_from_json(const json& j);
json instance_to_json(const InstanceDescription& d);

/// Builds E over the described algebras. Construction failures surface as InputError.
template <Scalar F>
TensorElement<F> build_element(const InstanceDescription& d);

/// Exact coefficient form of an instance (algebras and coefficient matrix).
InstanceDescription explicit_form(const InstanceDescription& d);

struct CheckSummary {
  bool passed = true;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  static CheckSummary from(const CheckReport& r);
  bool operator==(const CheckSummary&) const = default;
};

template <Scalar F>
struct BlockSummary {
  std::size_t index = 0;
  std::size_t size = 0;
  std::string mode;
  Matrix<F> r;
  Matrix<F> s;

  bool operator==(const BlockSummary&) const = default;
};

template <Scalar F>
struct CertificateDocument {
  json instance;
  std::string scalar_mode;
  std::uint64_t seed = 0;
  std::string command;

  std::string mode;
  std::string reason;
  bool full = false;
  std::string idempotency;
  std::optional<F> lambda;
  std::map<std::string, CheckSummary> checks;

  std::optional<Matrix<F>> antipode_bc;
  std::optional<Matrix<F>> antipode_cb;
  std::optional<Vec<F>> left_integral;
  std::optional<Vec<F>> right_integral;
  std::optional<Matrix<F>> modular_c;
  std::optional<Matrix<F>> modular_b;
  std::optional<Vec<F>> central;
  std::optional<Matrix<F>> pairing;      ///< <E, b_i^ (x) c_j^>
  std::optional<Matrix<F>> plancherel;   ///< <c_i^, c_j^>
  std::vector<BlockSummary<F>> blocks;

  double elapsed_ms = 0.0;

  bool operator==(const CertificateDocument&) const = default;
};

template <Scalar F>
json to_json(const CertificateDocument<F>& doc);
template <Scalar F>
CertificateDocument<F> certificate_from_json(const json& j);

/// Fills verdict, checks and derived data from a certificate.
template <Scalar F>
void fill_from_certificate(CertificateDocument<F>& doc, const SeparabilityCertificate<F>& cert);

}  // namespace sepidem::cli
