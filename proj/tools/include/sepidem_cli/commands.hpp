// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

// Subcommand drivers. Each returns the process exit code and writes the
// document to `out` in one piece; diagnostics go to `err`.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sepidem_cli/io.hpp"

namespace sepidem::cli {

inline constexpr int kExitSeparability = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNilpotent = 3;

int exit_code(CertificateMode mode);

struct RunOptions {
  std::optional<ScalarMode> mode;   ///< overrides the instance file
  std::optional<double> tolerance;  ///< float mode only
  std::uint64_t seed = 0;           ///< sampled checks
  std::size_t samples = 20;         ///< sampled pairs per inequality check
};

int run_verify(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err);

/// `what` is integrals, antipodes, modular or dual.
int run_derive(const std::string& path, const std::string& what, const RunOptions& opts, std::ostream& out,
               std::ostream& err);

int run_decompose(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err);

struct ConstructOptions {
  std::string kind;                  ///< E0, twisted, involutive_twisted, direct_sum, nonfull
  std::size_t n = 0;
  std::optional<std::string> r;      ///< JSON matrix literal; random when absent
  std::optional<std::string> s;
  std::optional<std::string> components;   ///< JSON array of construction objects
  bool normalize = false;
  bool explicit_coefficients = false;
  std::string out_path;
  ScalarMode mode = ScalarMode::exact;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
};

int run_construct(const ConstructOptions& opts, std::ostream& err);

/// Builds the instance document a construct call would write.
InstanceDescription construct_instance(const ConstructOptions& opts);

}  // namespace sepidem::cli
