// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file algebra.hpp
 * @brief Finite-dimensional unital algebras given by structure constants.
 *
 * An Algebra is an immutable handle; copies share the same data. Every
 * constructor verifies associativity, non-degeneracy and the unit law on all
 * basis triples before returning, and the star (when present) is verified to
 * be an antilinear anti-multiplicative involution.
 *
 * Elements, functionals and maps are plain coefficient vectors and matrices
 * relative to the distinguished basis, tagged with the algebra they live on.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sepidem/errors.hpp"
#include "sepidem/matrix.hpp"

namespace sepidem {

/// One term of a basis product: b_i b_j contains value * b_index.
template <Scalar F>
struct ProductTerm {
  std::size_t index;
  F value;
};

/// Sparse structure constant entry (i, j, k, value): b_i b_j has value on b_k.
template <Scalar F>
using StructureEntry = std::tuple<std::size_t, std::size_t, std::size_t, F>;

template <Scalar F>
class Algebra {
 public:
  /// M_n with the matrix-unit basis e_ij at index i*n + j (0-based).
  static Algebra matrix(std::size_t n, bool with_star);
  /// Block-diagonal sum; the basis is the concatenation of the summands' bases.
  static Algebra direct_sum(const std::vector<Algebra>& blocks);
  /// Validated general presentation. `star`, when given, acts as x -> star * conj(x).
  static Algebra from_structure_constants(std::size_t dim, const std::vector<StructureEntry<F>>& constants,
                                          const Vec<F>& unit, std::optional<Matrix<F>> star = std::nullopt,
                                          std::vector<std::string> labels = {});

  std::size_t dim() const { return d_->dim; }
  const std::string& label(std::size_t i) const { return d_->labels[i]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  const std::vector<ProductTerm<F>>& terms(std::size_t i, std::size_t j) const { return d_->terms[i * d_->dim + j]; }

  const Vec<F>& unit() const { return d_->unit; }
  Vec<F> zero() const { return Vec<F>(dim(), F(0)); }
  Vec<F> basis(std::size_t i) const;

  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const;
  /// Matrix of y -> x y.
  Matrix<F> left_mult(const Vec<F>& x) const;
  /// Matrix of y -> y x.
  Matrix<F> right_mult(const Vec<F>& x) const;
  Matrix<F> left_mult_basis(std::size_t i) const;
  Matrix<F> right_mult_basis(std::size_t i) const;

  bool has_star() const { return d_->star.has_value(); }
  /// Throws Errc::no_star_structure when absent.
  const Matrix<F>& star_matrix() const;
  Vec<F> star(const Vec<F>& x) const;

  bool has_blocks() const { return !d_->blocks.empty(); }
  /// Throws Errc::no_block_presentation when absent.
  const std::vector<std::size_t>& blocks() const;
  std::size_t block_offset(std::size_t block) const { return d_->block_offsets.at(block); }
  /// Basis index of the matrix unit e_ij of the given block.
  std::size_t unit_index(std::size_t block, std::size_t i, std::size_t j) const;

  /// Same object, or identical presentation (dimension, products, unit, star).
  bool same_as(const Algebra& other) const;

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<std::vector<ProductTerm<F>>> terms;
    Vec<F> unit;
    std::optional<Matrix<F>> star;
    std::vector<std::size_t> blocks;
    std::vector<std::size_t> block_offsets;
    std::vector<std::string> labels;
  };

  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Algebra validated(Data data);

  std::shared_ptr<const Data> d_;
};

/// Throws Errc::algebra_mismatch unless the two algebras agree.
template <Scalar F>
void require_same(const Algebra<F>& a, const Algebra<F>& b, const char* context);

template <Scalar F>
struct Element {
  Algebra<F> algebra;
  Vec<F> coeffs;

  Element operator*(const Element& o) const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const F& s) const;
  Element star() const { return {algebra, algebra.star(coeffs)}; }
  bool operator==(const Element& o) const { return algebra.same_as(o.algebra) && approx_equal(coeffs, o.coeffs); }
};

template <Scalar F>
Element<F> unit_element(const Algebra<F>& a) {
  return {a, a.unit()};
}

template <Scalar F>
Element<F> basis_element(const Algebra<F>& a, std::size_t i) {
  return {a, a.basis(i)};
}

template <Scalar F>
struct LinearFunctional {
  Algebra<F> algebra;
  Vec<F> covector;

  F operator()(const Vec<F>& x) const { return dot(covector, x); }
  F operator()(const Element<F>& x) const { return dot(covector, x.coeffs); }

  /// Entry (i, j) is f(b_i b_j).
  Matrix<F> pairing_matrix() const;
  /// Both forms (x, y) -> f(xy) non-degenerate, i.e. pairing_matrix invertible.
  bool is_faithful() const;
  /// x -> f(a x)
  LinearFunctional left_weighted(const Vec<F>& a) const;
  /// x -> f(x a)
  LinearFunctional right_weighted(const Vec<F>& a) const;
};

enum class MapKind { linear, multiplicative, anti_multiplicative };

/// Matrix of a linear map relative to the bases: column j is the image of b_j.
template <Scalar F>
struct LinearMap {
  Algebra<F> source;
  Algebra<F> target;
  Matrix<F> matrix;
  MapKind kind = MapKind::linear;
  bool bijective = false;

  Vec<F> operator()(const Vec<F>& x) const { return matrix.apply(x); }
  Element<F> operator()(const Element<F>& x) const;
};

/// Checks the multiplicativity law named by `kind` on all basis pairs.
template <Scalar F>
CheckReport check_map_kind(const Algebra<F>& source, const Algebra<F>& target, const Matrix<F>& m, MapKind kind,
                           const std::string& name);

/// Builds a map after verifying `kind` on all basis pairs and, if requested,
/// bijectivity. Throws not_multiplicative, not_anti_multiplicative or not_bijective.
template <Scalar F>
LinearMap<F> make_map(const Algebra<F>& source, const Algebra<F>& target, Matrix<F> m, MapKind kind,
                      bool require_bijective, const std::string& name = "map");

/// g after f.
template <Scalar F>
LinearMap<F> compose(const LinearMap<F>& g, const LinearMap<F>& f);

/// Throws Errc::not_invertible.
template <Scalar F>
LinearMap<F> inverse_map(const LinearMap<F>& f);

template <Scalar F>
LinearMap<F> identity_map(const Algebra<F>& a);

template <Scalar F>
bool maps_equal(const LinearMap<F>& f, const LinearMap<F>& g);

template <Scalar F>
Algebra<F> make_matrix_algebra(std::size_t n, bool with_star) {
  return Algebra<F>::matrix(n, with_star);
}

template <Scalar F>
Algebra<F> make_direct_sum(const std::vector<Algebra<F>>& blocks) {
  return Algebra<F>::direct_sum(blocks);
}

template <Scalar F>
Algebra<F> make_structure_constant_algebra(std::size_t dim, const std::vector<StructureEntry<F>>& constants,
                                           const Vec<F>& unit) {
  return Algebra<F>::from_structure_constants(dim, constants, unit);
}

/// Block-wise transpose e_ij -> e_ji; requires a block presentation.
template <Scalar F>
LinearMap<F> transpose_anti_map(const Algebra<F>& a);

/// Two-sided inverse; throws Errc::not_invertible when the left
/// multiplication matrix is singular.
template <Scalar F>
Element<F> invert(const Element<F>& x);

/// Block-wise matrix trace with Tr(1) equal to the sum of block sizes.
template <Scalar F>
LinearFunctional<F> trace_functional(const Algebra<F>& a);

}  // namespace sepidem
