// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace sepidem {
namespace {

using testing::cast;
using testing::q;

template <class F>
class SeparabilityTest : public ::testing::Test {};
TYPED_TEST_SUITE(SeparabilityTest, testing::Backends);

// r = 1, s = diag(1, -1) gives Tr(sr) = 0, so E^2 = 0.
template <Scalar F>
TensorElement<F> square_zero_element() {
  const Matrix<GaussianRational> r = Matrix<GaussianRational>::identity(2);
  const Matrix<GaussianRational> s{{q(1), q(0)}, {q(0), q(-1)}};
  return make_twisted(cast<F>(r), cast<F>(s), false);
}

TYPED_TEST(SeparabilityTest, IdempotencyClassification) {
  using F = TypeParam;
  const auto e0 = make_canonical_idempotent<F>(2);
  EXPECT_EQ(verify_idempotent(e0).kind, IdempotencyKind::idempotent);

  auto doubled = e0;
  doubled.coeffs *= F(2);
  const auto v = verify_idempotent(doubled);
  EXPECT_EQ(v.kind, IdempotencyKind::scalar_multiple);
  ASSERT_TRUE(v.lambda.has_value());
  EXPECT_TRUE(testing::close(*v.lambda, F(2)));

  EXPECT_EQ(verify_idempotent(square_zero_element<F>()).kind, IdempotencyKind::nilpotent_square_zero);
}

TYPED_TEST(SeparabilityTest, CanonicalAntipodesAreTransposes) {
  using F = TypeParam;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto e0 = make_canonical_idempotent<F>(n);
    const auto t = transpose_anti_map(e0.left);
    EXPECT_TRUE(testing::close(derive_antipode_bc(e0).matrix, t.matrix));
    EXPECT_TRUE(testing::close(derive_antipode_cb(e0).matrix, t.matrix));
  }
}

TYPED_TEST(SeparabilityTest, CertifyCanonicalElement) {
  using F = TypeParam;
  const auto cert = certify(make_canonical_idempotent<F>(3));
  EXPECT_EQ(cert.mode, CertificateMode::separability_idempotent);
  EXPECT_TRUE(cert.full);
  EXPECT_TRUE(cert.absorption_b_side);
  EXPECT_TRUE(cert.absorption_c_side);
  EXPECT_TRUE(cert.counit.passed);
  EXPECT_TRUE(cert.swap.passed);
  EXPECT_TRUE(cert.splitting.passed);
  EXPECT_TRUE(cert.integrals.passed);
  ASSERT_TRUE(cert.central.has_value());
  EXPECT_TRUE(testing::close(cert.central->coeffs, cert.central->algebra.unit()));
}

TYPED_TEST(SeparabilityTest, NonFullElementIsRejected) {
  using F = TypeParam;
  const auto cert = certify(make_nonfull_counterexample<F>(2));
  EXPECT_EQ(cert.mode, CertificateMode::rejected);
  EXPECT_FALSE(cert.full);
  EXPECT_NE(cert.reason.find("full"), std::string::npos) << cert.reason;
  EXPECT_TRUE(testing::throws_code([&] { derive_antipode_bc(make_nonfull_counterexample<F>(2)); }, Errc::not_full));
}

TYPED_TEST(SeparabilityTest, SquareZeroElementIsNilpotentVariant) {
  using F = TypeParam;
  const auto cert = certify(square_zero_element<F>());
  EXPECT_EQ(cert.mode, CertificateMode::nilpotent_variant);
  EXPECT_TRUE(cert.antipode_bc.has_value());
  EXPECT_TRUE(cert.antipode_cb.has_value());
  EXPECT_FALSE(cert.left_integral.has_value());
}

TYPED_TEST(SeparabilityTest, OneSidedDerivationAgreesWithDirectDerivation) {
  using F = TypeParam;
  RationalSampler rs(21);
  for (int trial = 0; trial < 4; ++trial) {
    const auto pair = random_twist_pair<F>(2, rs);
    const auto e = make_twisted(pair.r, pair.s, true);
    EXPECT_TRUE(testing::close(derive_one_sided(e, Absorption::c_side).matrix, derive_antipode_bc(e).matrix));
    EXPECT_TRUE(testing::close(derive_one_sided(e, Absorption::b_side).matrix, derive_antipode_cb(e).matrix));
  }
}

TYPED_TEST(SeparabilityTest, RandomTwistedElementsPassEveryIdentity) {
  using F = TypeParam;
  RationalSampler rs(22);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto pair = random_twist_pair<F>(n, rs);
    const auto e = make_twisted(pair.r, pair.s, true);
    const auto s = derive_antipode_bc(e);
    const auto sp = derive_antipode_cb(e);
    EXPECT_TRUE(counit_identities(e, s, sp).passed);
    EXPECT_TRUE(swap_identity(e, s, sp).passed);
    EXPECT_TRUE(splitting_check(e, s).passed);
    EXPECT_TRUE(testing::close(central_element(e, s).coeffs, e.right.unit()));
    const auto closed = oracle::closed_forms(pair.r, pair.s);
    EXPECT_TRUE(testing::close(s.matrix, closed.antipode_bc));
    EXPECT_TRUE(testing::close(sp.matrix, closed.antipode_cb));
  }
}

TYPED_TEST(SeparabilityTest, WrongAntipodeFailsTheIdentities) {
  using F = TypeParam;
  // With r = 1 the C -> B antipode is the transpose but S is not.
  const auto e = make_twisted(Matrix<F>::identity(2),
                              cast<F>(Matrix<GaussianRational>{{q(1), q(1)}, {q(0), q(1)}}), true);
  const auto wrong = transpose_anti_map(e.left);
  EXPECT_FALSE(counit_identities(e, wrong, wrong).passed);
  EXPECT_FALSE(splitting_check(e, wrong).passed);
}

TYPED_TEST(SeparabilityTest, DeterminacyOnEqualAndDistinctElements) {
  using F = TypeParam;
  const auto e0 = make_canonical_idempotent<F>(2);
  const auto same = determinacy_check(e0, e0);
  EXPECT_TRUE(same.applicable);
  EXPECT_TRUE(same.elements_equal);
  EXPECT_TRUE(same.passed);

  const auto other = make_twisted(cast<F>(Matrix<GaussianRational>{{q(2), q(0)}, {q(0), q(1)}}),
                                  Matrix<F>::identity(2), true);
  const auto distinct = determinacy_check(e0, other);
  EXPECT_FALSE(distinct.applicable);
  EXPECT_TRUE(distinct.passed);
}

TYPED_TEST(SeparabilityTest, ConjugacyTransportAlongInnerAutomorphism) {
  using F = TypeParam;
  const std::size_t n = 2;
  const Matrix<F> a = cast<F>(Matrix<GaussianRational>{{q(1), q(2)}, {q(0), q(1)}});
  const Matrix<F> a_inv = *inverse(a);
  const auto e1 = make_canonical_idempotent<F>(n);
  // (Ad a (x) id)E0 is the twist with r = a, s = a^-1.
  const auto e2 = make_twisted(a, a_inv, false);
  Matrix<F> ad(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<F> img = a * oracle::unit<F>(n, i, j) * a_inv;
      ad.set_column(i * n + j, oracle::flatten(img));
    }
  const auto alpha_b = make_map(e1.left, e2.left, ad, MapKind::multiplicative, true, "Ad a");
  const auto alpha_c = conjugacy_transport(e1, e2, alpha_b);
  EXPECT_TRUE(maps_equal(alpha_c, identity_map(e1.right)));
}

TYPED_TEST(SeparabilityTest, WorkedExamplesOnTwoByTwo) {
  using F = TypeParam;
  // r = 1, s = diag(2, 1): E^2 = (Tr(sr)/n) E = (3/2) E
  const auto scaled = make_twisted(Matrix<F>::identity(2), cast<F>(Matrix<GaussianRational>{{q(2), q(0)}, {q(0), q(1)}}),
                                   false);
  const auto v = verify_idempotent(scaled);
  EXPECT_EQ(v.kind, IdempotencyKind::scalar_multiple);
  ASSERT_TRUE(v.lambda.has_value());
  EXPECT_TRUE(testing::close(*v.lambda, cast<F>(q(3, 2))));

  // Square-zero twist still has S(e_12) = -e_21.
  const auto s_nil = derive_antipode_bc(square_zero_element<F>());
  Vec<F> minus_e21(4, F(0));
  minus_e21[2] = F(-1);
  EXPECT_TRUE(testing::close(s_nil.matrix.column(1), minus_e21));

  // r = s* = diag(7/5, 1/5): S(e_12) = 7 e_21 and S'(e_21) = 7 e_12.
  const auto inv = make_involutive_twisted<F>(cast<F>(Matrix<GaussianRational>{{q(7, 5), q(0)}, {q(0), q(1, 5)}}));
  Vec<F> seven_e21(4, F(0)), seven_e12(4, F(0));
  seven_e21[2] = F(7);
  seven_e12[1] = F(7);
  EXPECT_TRUE(testing::close(derive_antipode_bc(inv.e).matrix.column(1), seven_e21));
  EXPECT_TRUE(testing::close(derive_antipode_cb(inv.e).matrix.column(2), seven_e12));
}

TEST(CertificateModes, NamesAreStable) {
  EXPECT_EQ(to_string(CertificateMode::separability_idempotent), "separability_idempotent");
  EXPECT_EQ(to_string(CertificateMode::nilpotent_variant), "nilpotent_variant");
  EXPECT_EQ(to_string(CertificateMode::rejected), "rejected");
}

}  // namespace
}  // namespace sepidem
