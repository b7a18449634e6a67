// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header for the kernel.

#pragma once

#include "sepidem/algebra.hpp"
#include "sepidem/constructions.hpp"
#include "sepidem/duality.hpp"
#include "sepidem/errors.hpp"
#include "sepidem/integrals.hpp"
#include "sepidem/linalg.hpp"
#include "sepidem/matrix.hpp"
#include "sepidem/random_instances.hpp"
#include "sepidem/scalar.hpp"
#include "sepidem/separability.hpp"
#include "sepidem/star.hpp"
#include "sepidem/tensor.hpp"
