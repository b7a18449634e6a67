// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace sepidem {
namespace {

using testing::cast;
using testing::q;

template <class F>
class TensorTest : public ::testing::Test {};
TYPED_TEST_SUITE(TensorTest, testing::Backends);

// Naive product in B (x) C through simple tensors, independent of the matrix forms.
template <Scalar F>
Matrix<F> naive_product(const TensorElement<F>& x, const TensorElement<F>& y) {
  const auto& b = x.left;
  const auto& c = x.right;
  Matrix<F> out(b.dim(), c.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (literally_zero(x.coeffs(i, j))) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < c.dim(); ++l) {
          if (literally_zero(y.coeffs(k, l))) continue;
          const Vec<F> bb = b.multiply(b.basis(i), b.basis(k));
          const Vec<F> cc = c.multiply(c.basis(j), c.basis(l));
          for (std::size_t p = 0; p < b.dim(); ++p)
            for (std::size_t r = 0; r < c.dim(); ++r) out(p, r) += x.coeffs(i, j) * y.coeffs(k, l) * bb[p] * cc[r];
        }
    }
  return out;
}

TYPED_TEST(TensorTest, ProductMatchesSimpleTensorExpansion) {
  using F = TypeParam;
  RationalSampler rs(11);
  const auto b = make_matrix_algebra<F>(2, true);
  const auto c = make_direct_sum<F>({make_matrix_algebra<F>(1, true), make_matrix_algebra<F>(1, true)});
  for (int trial = 0; trial < 5; ++trial) {
    Matrix<F> xa(b.dim(), c.dim()), ya(b.dim(), c.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < c.dim(); ++j) {
        xa(i, j) = cast<F>(rs.scalar(true));
        ya(i, j) = cast<F>(rs.scalar(true));
      }
    const auto x = make_tensor(b, c, xa);
    const auto y = make_tensor(b, c, ya);
    EXPECT_TRUE(testing::close(tensor_mul(x, y).coeffs, naive_product(x, y)));
  }
}

TYPED_TEST(TensorTest, SidedProductsAgreeWithSimpleTensors) {
  using F = TypeParam;
  RationalSampler rs(12);
  const auto b = make_matrix_algebra<F>(2, true);
  const auto c = make_matrix_algebra<F>(2, true);
  Matrix<F> xa(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) xa(i, j) = cast<F>(rs.scalar(true));
  const auto e = make_tensor(b, c, xa);
  const Element<F> u{b, random_element(b, rs, true)};
  const Element<F> v{c, random_element(c, rs, true)};
  const auto one_b = unit_element(b);
  const auto one_c = unit_element(c);
  EXPECT_TRUE(testing::close(mult_sided(e, Placement::b_on_left, u).coeffs,
                             tensor_mul(simple_tensor(u, one_c), e).coeffs));
  EXPECT_TRUE(testing::close(mult_sided(e, Placement::b_on_right, u).coeffs,
                             tensor_mul(e, simple_tensor(u, one_c)).coeffs));
  EXPECT_TRUE(testing::close(mult_sided(e, Placement::c_on_left, v).coeffs,
                             tensor_mul(simple_tensor(one_b, v), e).coeffs));
  EXPECT_TRUE(testing::close(mult_sided(e, Placement::c_on_right, v).coeffs,
                             tensor_mul(e, simple_tensor(one_b, v)).coeffs));
}

TYPED_TEST(TensorTest, LegsAndFullness) {
  using F = TypeParam;
  const auto e0 = make_canonical_idempotent<F>(2);
  EXPECT_EQ(left_leg(e0).dim(), 4u);
  EXPECT_EQ(right_leg(e0).dim(), 4u);
  EXPECT_TRUE(is_full(e0));

  const auto b = make_matrix_algebra<F>(2, true);
  const auto simple = simple_tensor(basis_element(b, 0), basis_element(b, 3));
  EXPECT_EQ(left_leg(simple).dim(), 1u);
  EXPECT_FALSE(is_full(simple));
  EXPECT_FALSE(is_full(make_nonfull_counterexample<F>(2)));
}

TYPED_TEST(TensorTest, SlicesOfCanonicalElement) {
  using F = TypeParam;
  const std::size_t n = 3;
  const auto e0 = make_canonical_idempotent<F>(n);
  // (Tr (x) id)E0 = (1/n) sum_i e_ii = unit / n
  const auto tr = trace_functional(e0.left);
  const Element<F> sliced = slice_left(tr, e0);
  Vec<F> expected = e0.right.unit();
  for (auto& x : expected) x = x / F(static_cast<long>(n));
  EXPECT_TRUE(testing::close(sliced.coeffs, expected));
  EXPECT_TRUE(testing::close(slice_right(e0, trace_functional(e0.right)).coeffs, expected));
}

TYPED_TEST(TensorTest, SwapAndMapWithTransposesFixesCanonicalElement) {
  using F = TypeParam;
  const auto e0 = make_canonical_idempotent<F>(3);
  const auto t = transpose_anti_map(e0.left);
  EXPECT_TRUE(testing::close(swap_and_map(e0, t, t).coeffs, e0.coeffs));
}

TEST(TensorShape, CoefficientShapeIsChecked) {
  using F = GaussianRational;
  const auto b = make_matrix_algebra<F>(2, true);
  EXPECT_TRUE(testing::throws_code([&] { make_tensor(b, b, Matrix<F>(3, 4)); }, Errc::dimension_mismatch));
}

}  // namespace
}  // namespace sepidem
