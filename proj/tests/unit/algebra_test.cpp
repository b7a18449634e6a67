// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace sepidem {
namespace {

using testing::cast;
using testing::matrix_unit;
using testing::q;
using testing::qi;

template <class F>
class AlgebraTest : public ::testing::Test {};
TYPED_TEST_SUITE(AlgebraTest, testing::Backends);

TYPED_TEST(AlgebraTest, MatrixUnitsMultiplyAsExpected) {
  using F = TypeParam;
  const auto m3 = make_matrix_algebra<F>(3, true);
  EXPECT_EQ(m3.dim(), 9u);
  // e_01 e_12 = e_02 and e_01 e_01 = 0
  EXPECT_TRUE(testing::close(m3.multiply(matrix_unit<F>(3, 0, 1), matrix_unit<F>(3, 1, 2)), matrix_unit<F>(3, 0, 2)));
  EXPECT_TRUE(is_zero_vector(m3.multiply(matrix_unit<F>(3, 0, 1), matrix_unit<F>(3, 0, 1))));
  Vec<F> unit(9, F(0));
  for (std::size_t i = 0; i < 3; ++i) unit[i * 3 + i] = F(1);
  EXPECT_TRUE(testing::close(m3.unit(), unit));
}

TYPED_TEST(AlgebraTest, StarIsConjugateTranspose) {
  using F = TypeParam;
  const auto m2 = make_matrix_algebra<F>(2, true);
  Vec<F> x = m2.zero();
  x[1] = testing::cast<F>(qi(2, 3));
  Vec<F> expected = m2.zero();
  expected[2] = testing::cast<F>(qi(2, -3));
  EXPECT_TRUE(testing::close(m2.star(x), expected));
  EXPECT_FALSE(make_matrix_algebra<F>(2, false).has_star());
  EXPECT_TRUE(testing::throws_code([&] { make_matrix_algebra<F>(2, false).star_matrix(); }, Errc::no_star_structure));
}

TYPED_TEST(AlgebraTest, DirectSumHasBlockUnitAndBlockOffsets) {
  using F = TypeParam;
  const auto a = make_direct_sum<F>({make_matrix_algebra<F>(1, true), make_matrix_algebra<F>(2, true)});
  EXPECT_EQ(a.dim(), 5u);
  ASSERT_TRUE(a.has_blocks());
  EXPECT_EQ(a.blocks(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.block_offset(1), 1u);
  EXPECT_EQ(a.unit_index(1, 1, 0), 1u + 2u);
  // Elements of different blocks annihilate each other.
  EXPECT_TRUE(is_zero_vector(a.multiply(a.basis(0), a.basis(a.unit_index(1, 0, 0)))));
  EXPECT_TRUE(testing::close(trace_functional(a)(a.unit()), F(3)));
}

TYPED_TEST(AlgebraTest, RandomElementsAssociate) {
  using F = TypeParam;
  const auto a = make_direct_sum<F>({make_matrix_algebra<F>(2, true), make_matrix_algebra<F>(1, true)});
  RationalSampler rs(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec<F> x = random_element(a, rs, true);
    const Vec<F> y = random_element(a, rs, true);
    const Vec<F> z = random_element(a, rs, true);
    EXPECT_TRUE(testing::close(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z))));
    EXPECT_TRUE(testing::close(a.multiply(a.unit(), x), x));
    EXPECT_TRUE(testing::close(a.left_mult(x).apply(y), a.multiply(x, y)));
    EXPECT_TRUE(testing::close(a.right_mult(x).apply(y), a.multiply(y, x)));
    EXPECT_TRUE(testing::close(a.star(a.multiply(x, y)), a.multiply(a.star(y), a.star(x))));
  }
}

TYPED_TEST(AlgebraTest, TransposeIsAntiMultiplicativeButNotMultiplicative) {
  using F = TypeParam;
  const auto m2 = make_matrix_algebra<F>(2, true);
  const LinearMap<F> t = transpose_anti_map(m2);
  EXPECT_TRUE(check_map_kind(m2, m2, t.matrix, MapKind::anti_multiplicative, "transpose").passed);
  const CheckReport multiplicative = check_map_kind(m2, m2, t.matrix, MapKind::multiplicative, "transpose");
  EXPECT_FALSE(multiplicative.passed);
  EXPECT_FALSE(multiplicative.witnesses.empty());
  EXPECT_TRUE(testing::throws_code(
      [&] { make_map(m2, m2, t.matrix, MapKind::multiplicative, true, "transpose"); }, Errc::not_multiplicative));
  EXPECT_TRUE(maps_equal(compose(t, t), identity_map(m2)));
}

TYPED_TEST(AlgebraTest, InvertAndSingularElements) {
  using F = TypeParam;
  const auto m2 = make_matrix_algebra<F>(2, true);
  Element<F> d{m2, m2.zero()};
  d.coeffs[0] = F(2);
  d.coeffs[1] = F(1);
  d.coeffs[3] = F(4);
  const Element<F> inv = invert(d);
  EXPECT_TRUE(testing::close((d * inv).coeffs, m2.unit()));
  EXPECT_TRUE(testing::close((inv * d).coeffs, m2.unit()));
  EXPECT_TRUE(testing::throws_code([&] { invert(basis_element(m2, 1)); }, Errc::not_invertible));
}

TYPED_TEST(AlgebraTest, FaithfulnessOfFunctionals) {
  using F = TypeParam;
  const auto m2 = make_matrix_algebra<F>(2, true);
  EXPECT_TRUE(trace_functional(m2).is_faithful());
  LinearFunctional<F> corner{m2, m2.zero()};
  corner.covector[0] = F(1);
  EXPECT_FALSE(corner.is_faithful());
}

TEST(StructureConstants, RejectsNonAssociativeTables) {
  using F = GaussianRational;
  // b1 b1 = b0 + b1 with unit b0 is commutative and associative; claiming b1
  // as the unit violates the unit law.
  std::vector<StructureEntry<F>> ok = {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}, {1, 1, 0, q(1)},
                                       {1, 1, 1, q(1)}};
  EXPECT_NO_THROW(make_structure_constant_algebra<F>(2, ok, {q(1), q(0)}));

  EXPECT_TRUE(testing::throws_code([&] { make_structure_constant_algebra<F>(2, ok, {q(0), q(1)}); },
                                   Errc::not_unital));

  // b1 b1 = b0 and b1 b0 = b1 but b0 b1 = 0: (b1 b1) b1 = b1 while b1 (b1 b1) = b1,
  // and (b0 b1) b1 = 0 while b0 (b1 b1) = b0.
  std::vector<StructureEntry<F>> broken = {{0, 0, 0, q(1)}, {1, 0, 1, q(1)}, {1, 1, 0, q(1)}};
  EXPECT_ANY_THROW(make_structure_constant_algebra<F>(2, broken, {q(1), q(0)}));
}

TEST(StructureConstants, MismatchedAlgebrasAreDetected) {
  using F = GaussianRational;
  const auto a = make_matrix_algebra<F>(2, true);
  const auto b = make_matrix_algebra<F>(2, true);
  EXPECT_TRUE(a.same_as(b));
  EXPECT_TRUE(testing::throws_code([&] { require_same(a, make_matrix_algebra<F>(3, true), "test"); },
                                   Errc::algebra_mismatch));
}

}  // namespace
}  // namespace sepidem
