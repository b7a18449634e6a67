// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace sepidem {
namespace {

using testing::cast;
using testing::matrix_unit;
using testing::q;

template <class F>
class DualityTest : public ::testing::Test {};
TYPED_TEST_SUITE(DualityTest, testing::Backends);

TYPED_TEST(DualityTest, CanonicalPairingOfDiagonalUnits) {
  using F = TypeParam;
  const DualContext<F> ctx(derive_structure(make_canonical_idempotent<F>(2)));
  const auto bhat = ctx.fourier_b(matrix_unit<F>(2, 0, 0));
  const auto chat = ctx.fourier_c(matrix_unit<F>(2, 0, 0));
  EXPECT_TRUE(testing::close(ctx.pairing(bhat, chat), F(2)));
  EXPECT_TRUE(testing::close(ctx.pairing(bhat, ctx.fourier_c(matrix_unit<F>(2, 1, 1))), F(0)));
}

TYPED_TEST(DualityTest, CanonicalDualAntipodeTransposes) {
  using F = TypeParam;
  const DualContext<F> ctx(derive_structure(make_canonical_idempotent<F>(2)));
  const auto image = ctx.dual_antipode(ctx.fourier_c(matrix_unit<F>(2, 0, 1)));
  EXPECT_EQ(image.side, DualSide::b_dual);
  EXPECT_TRUE(image.same_as(ctx.fourier_b(matrix_unit<F>(2, 1, 0))));
}

TYPED_TEST(DualityTest, CanonicalDualStar) {
  using F = TypeParam;
  const DualContext<F> ctx(derive_structure(make_canonical_idempotent<F>(2)));
  const auto w = ctx.fourier_c(matrix_unit<F>(2, 0, 1));
  const auto ws = ctx.dual_star(w);
  EXPECT_EQ(ws.side, DualSide::b_dual);
  // S'(e_01*) = transpose(e_10) = e_01
  EXPECT_TRUE(testing::close(ws.representing, matrix_unit<F>(2, 0, 1)));
  EXPECT_TRUE(ctx.dual_star(ws).same_as(w));
}

TYPED_TEST(DualityTest, DualStarNeedsSelfAdjointElement) {
  using F = TypeParam;
  const auto e = make_twisted(cast<F>(Matrix<GaussianRational>{{q(1), q(1)}, {q(0), q(1)}}),
                              Matrix<F>::identity(2), true);
  const DualContext<F> ctx(derive_structure(e));
  EXPECT_FALSE(ctx.self_adjoint());
  EXPECT_TRUE(testing::throws_code([&] { ctx.dual_star(ctx.fourier_c(matrix_unit<F>(2, 0, 1))); },
                                   Errc::precondition_failed));
}

TYPED_TEST(DualityTest, CanonicalPlancherelOnOffDiagonalUnit) {
  using F = TypeParam;
  const DualContext<F> ctx(derive_structure(make_canonical_idempotent<F>(2)));
  const auto chat = ctx.fourier_c(matrix_unit<F>(2, 0, 1));
  // phi(e_21 e_12) = phi(e_22) = 2
  EXPECT_TRUE(testing::close(ctx.plancherel_form(chat, chat), F(2)));
}

TYPED_TEST(DualityTest, PairingRejectsMismatchedSides) {
  using F = TypeParam;
  const DualContext<F> ctx(derive_structure(make_canonical_idempotent<F>(2)));
  const auto chat = ctx.fourier_c(matrix_unit<F>(2, 0, 0));
  EXPECT_TRUE(testing::throws_code([&] { ctx.pairing(chat, chat); }, Errc::side_mismatch));
}

TYPED_TEST(DualityTest, RandomTwistsSatisfyPairingIdentities) {
  using F = TypeParam;
  RationalSampler rs(51);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto pair = random_twist_pair<F>(n, rs);
    const DualContext<F> ctx(derive_structure(make_twisted(pair.r, pair.s, false)));
    const auto& d = ctx.derived();
    const auto sp_inv = inverse_map(d.antipode_cb);
    for (int k = 0; k < 4; ++k) {
      const Vec<F> b = random_element(d.e.left, rs, true);
      const Vec<F> c = random_element(d.e.right, rs, true);
      const auto bhat = ctx.fourier_b(b);
      const auto chat = ctx.fourier_c(c);
      // <E, b^ (x) c^> = phi(S'^-1(b) c), evaluated here without the context.
      const F expected = d.left_integral(d.e.right.multiply(sp_inv(b), c));
      const double scale = max_abs(b) * max_abs(c) * max_abs(d.left_integral.covector);
      EXPECT_TRUE(testing::close(ctx.pairing(bhat, chat), expected, scale));
      EXPECT_TRUE(testing::close(ctx.from_covector(DualSide::b_dual, bhat.covector).representing, b));
      EXPECT_TRUE(testing::close(ctx.from_covector(DualSide::c_dual, chat.covector).representing, c));
      const auto back = ctx.dual_antipode(ctx.dual_antipode(chat));
      EXPECT_EQ(back.side, DualSide::c_dual);
    }
  }
}

TYPED_TEST(DualityTest, PlancherelFormIsPositiveOnInvolutiveInstances) {
  using F = TypeParam;
  RationalSampler rs(52);
  const auto inst = make_involutive_twisted<F>(random_involutive<F>(2, rs));
  const DualContext<F> ctx(derive_structure(inst.e));
  for (int k = 0; k < 6; ++k) {
    const Vec<F> c = random_element(inst.e.right, rs, true);
    const auto chat = ctx.fourier_c(c);
    const F v = ctx.plancherel_form(chat, chat);
    EXPECT_TRUE(scalar_traits<F>::is_real(v, max_abs(c) * max_abs(c)));
    EXPECT_GE(scalar_traits<F>::real_sign(v, max_abs(c) * max_abs(c)), 0);
  }
}

TEST(DualSideNames, AreStable) {
  EXPECT_EQ(to_string(DualSide::b_dual), "B-dual");
  EXPECT_EQ(to_string(DualSide::c_dual), "C-dual");
}

}  // namespace
}  // namespace sepidem
