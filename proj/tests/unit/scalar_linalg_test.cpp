// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace sepidem {
namespace {

using testing::cast;
using testing::q;
using testing::qi;

TEST(GaussianRational, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(GaussianRational::parse("3/4"), q(3, 4));
  EXPECT_EQ(GaussianRational::parse("-6/8"), q(-3, 4));
  EXPECT_EQ(GaussianRational::parse("1.25"), q(5, 4));
  EXPECT_EQ(GaussianRational::parse("3e-2"), q(3, 100));
  EXPECT_EQ(GaussianRational::parse("2", "-1/3"), GaussianRational(mpq_class(2), mpq_class(-1, 3)));
  EXPECT_ANY_THROW(GaussianRational::parse("abc"));
  EXPECT_ANY_THROW(GaussianRational::parse("1/0"));
}

TEST(GaussianRational, FieldArithmeticIsExact) {
  const GaussianRational i = qi(0, 1);
  EXPECT_EQ(i * i, q(-1));
  const GaussianRational z = qi(3, -4);
  EXPECT_EQ(z * z.conj(), q(25));
  EXPECT_EQ(z.norm(), mpq_class(25));
  EXPECT_EQ((z / z), q(1));
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_ANY_THROW(z / q(0));
}

TEST(GaussianRational, PrintsRealAndImaginaryParts) {
  EXPECT_EQ(q(1, 2).to_string(), "1/2");
  EXPECT_EQ(q(-7).to_string(), "-7");
  EXPECT_EQ(GaussianRational(mpq_class(1, 2), mpq_class(3, 4)).to_string(), "1/2+3/4i");
}

TEST(FloatTolerance, ScopedGuardRestoresPrevious) {
  const double before = float_tolerance();
  {
    ScopedFloatTolerance guard(1e-3);
    EXPECT_TRUE(scalar_traits<Complex>::equal(Complex(1.0), Complex(1.0005)));
  }
  EXPECT_EQ(float_tolerance(), before);
  EXPECT_FALSE(scalar_traits<Complex>::equal(Complex(1.0), Complex(1.0005)));
}

TEST(FloatTolerance, IsRelativeToScale) {
  EXPECT_TRUE(scalar_traits<Complex>::equal(Complex(1e6), Complex(1e6 + 1e-4)));
  EXPECT_FALSE(scalar_traits<Complex>::equal(Complex(1e-6), Complex(2e-6)));
  EXPECT_TRUE(scalar_traits<Complex>::equal(Complex(1e-6), Complex(2e-6), 1e4));
}

template <class F>
class LinalgTest : public ::testing::Test {};
TYPED_TEST_SUITE(LinalgTest, testing::Backends);

TYPED_TEST(LinalgTest, RankAndNullspaceOfDeficientMatrix) {
  using F = TypeParam;
  const Matrix<F> m = cast<F>(Matrix<GaussianRational>{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}});
  EXPECT_EQ(rank(m), 2u);
  const Matrix<F> k = nullspace(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(is_zero_vector(m.apply(k.column(0))));
}

TYPED_TEST(LinalgTest, SolveReportsInconsistentRightHandSides) {
  using F = TypeParam;
  const Matrix<F> a = cast<F>(Matrix<GaussianRational>{{q(1), q(1)}, {q(2), q(2)}});
  const Matrix<F> b = cast<F>(Matrix<GaussianRational>{{q(1), q(1)}, {q(2), q(3)}});
  const LinearSolution<F> sol = solve(a, b);
  ASSERT_EQ(sol.consistent.size(), 2u);
  EXPECT_TRUE(sol.consistent[0]);
  EXPECT_FALSE(sol.consistent[1]);
  EXPECT_EQ(sol.nullity, 1u);
  EXPECT_FALSE(sol.all_consistent());
}

TYPED_TEST(LinalgTest, InverseOfRandomInvertibleMatrices) {
  using F = TypeParam;
  RationalSampler rs(77);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix<F> m = random_invertible<F>(n, rs, true);
    const auto inv = inverse(m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(testing::close(Matrix<F>(m * *inv), Matrix<F>::identity(n)));
    EXPECT_TRUE(testing::close(Matrix<F>(*inv * m), Matrix<F>::identity(n)));
  }
  EXPECT_FALSE(inverse(cast<F>(Matrix<GaussianRational>{{q(1), q(2)}, {q(2), q(4)}})).has_value());
}

TYPED_TEST(LinalgTest, PsdTestClassifiesSmallGramMatrices) {
  using F = TypeParam;
  const auto rank_one = psd_test(cast<F>(Matrix<GaussianRational>{{q(1), q(1)}, {q(1), q(1)}}));
  EXPECT_TRUE(rank_one.positive_semidefinite);
  EXPECT_EQ(rank_one.rank, 1u);

  const auto indefinite = psd_test(cast<F>(Matrix<GaussianRational>{{q(1), q(2)}, {q(2), q(1)}}));
  EXPECT_FALSE(indefinite.positive_semidefinite);

  // A zero diagonal entry with a nonzero off-diagonal entry cannot be PSD.
  const auto zero_diag = psd_test(cast<F>(Matrix<GaussianRational>{{q(0), q(1)}, {q(1), q(0)}}));
  EXPECT_FALSE(zero_diag.positive_semidefinite);

  const auto hermitian = psd_test(cast<F>(Matrix<GaussianRational>{{q(2), qi(0, 1)}, {qi(0, -1), q(2)}}));
  EXPECT_TRUE(hermitian.hermitian);
  EXPECT_TRUE(hermitian.positive_semidefinite);
  EXPECT_EQ(hermitian.rank, 2u);

  const auto skew = psd_test(cast<F>(Matrix<GaussianRational>{{q(2), qi(0, 1)}, {qi(0, 1), q(2)}}));
  EXPECT_FALSE(skew.hermitian);
}

TYPED_TEST(LinalgTest, GramOfRandomVectorsIsPsd) {
  using F = TypeParam;
  RationalSampler rs(91);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<F> v(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) v(i, j) = cast<F>(rs.scalar(true));
    const Matrix<F> g = v.adjoint() * v;
    const auto res = psd_test(g);
    EXPECT_TRUE(res.hermitian);
    EXPECT_TRUE(res.positive_semidefinite);
    EXPECT_LE(res.rank, 3u);
  }
}

}  // namespace
}  // namespace sepidem
