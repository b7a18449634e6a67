// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <string>

#include "sepidem_cli/io.hpp"
#include "support/fixtures.hpp"

namespace sepidem::cli {
namespace {

using sepidem::testing::q;
using sepidem::testing::qi;

TEST(ScalarEncoding, ExactValuesUseFractionStrings) {
  EXPECT_EQ(encode_scalar(q(3, 4)), json("3/4"));
  EXPECT_EQ(encode_scalar(q(-2)), json("-2"));
  EXPECT_EQ(encode_scalar(qi(1, -1)), json::array({"1", "-1"}));
  EXPECT_EQ(encode_scalar(Complex(0.5, 0.0)), json(0.5));
  EXPECT_EQ(encode_scalar(Complex(0.5, 2.0)), json::array({0.5, 2.0}));
}

TEST(ScalarEncoding, DecoderAcceptsEveryForm) {
  EXPECT_EQ(decode_exact(json("1/2"), "/x"), q(1, 2));
  EXPECT_EQ(decode_exact(json(0.25), "/x"), q(1, 4));
  EXPECT_EQ(decode_exact(json(-3), "/x"), q(-3));
  EXPECT_EQ(decode_exact(json::array({"1", "2/3"}), "/x"), GaussianRational(mpq_class(1), mpq_class(2, 3)));
  EXPECT_THROW(decode_exact(json("one half"), "/x"), InputError);
  EXPECT_THROW(decode_exact(json::array({1, 2, 3}), "/x"), InputError);
  EXPECT_THROW(decode_exact(json(true), "/x"), InputError);
}

TEST(ScalarEncoding, ErrorsNameTheLocation) {
  try {
    decode_exact(json("x/y"), "/element/coefficients/0/1");
    FAIL() << "no error";
  } catch (const InputError& e) {
    EXPECT_EQ(e.where(), "/element/coefficients/0/1");
  }
}

TEST(ScalarMode, ParsesAliases) {
  EXPECT_EQ(parse_scalar_mode("exact"), ScalarMode::exact);
  EXPECT_EQ(parse_scalar_mode("float"), ScalarMode::float64);
  EXPECT_EQ(parse_scalar_mode("float64"), ScalarMode::float64);
  EXPECT_THROW(parse_scalar_mode("double"), InputError);
}

TEST(InstanceParsing, MalformedJsonReportsLineAndColumn) {
  try {
    parse_instance("{\n  \"mode\": \"exact\",\n  \"element\": [\n");
    FAIL() << "no error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
}

TEST(InstanceParsing, UnknownConstructionIsAnInputError) {
  EXPECT_THROW(build_element<GaussianRational>(parse_instance(R"({"element":{"construction":{"kind":"magic"}}})")),
               InputError);
}

TEST(InstanceParsing, ConstructionAndExplicitFormsBuildTheSameElement) {
  const InstanceDescription d =
      parse_instance(R"({"mode":"exact","element":{"construction":{"kind":"twisted","r":[["1","1"],["0","1"]],
                         "s":[["2","0"],["0","1/2"]],"normalize":true}}})");
  const auto from_construction = build_element<GaussianRational>(d);
  const InstanceDescription explicit_d = explicit_form(d);
  ASSERT_TRUE(explicit_d.coefficients.has_value());
  const auto from_coefficients = build_element<GaussianRational>(explicit_d);
  EXPECT_TRUE(approx_equal(from_construction.coeffs, from_coefficients.coeffs));

  const InstanceDescription again = instance_from_json(instance_to_json(explicit_d));
  EXPECT_EQ(instance_to_json(again), instance_to_json(explicit_d));
}

TEST(InstanceParsing, StructureConstantAlgebraIsAccepted) {
  // C (x) C with the single basis element 1 and E = 1 (x) 1.
  const InstanceDescription d = parse_instance(R"({
    "algebras": {
      "left": {"dim": 1, "unit": ["1"], "constants": [[0, 0, 0, "1"]]},
      "right": {"blocks": [1], "star": false}
    },
    "element": {"coefficients": [["1"]]}
  })");
  const auto e = build_element<GaussianRational>(d);
  EXPECT_EQ(certify(e).mode, CertificateMode::separability_idempotent);
}

TEST(InstanceParsing, ShapeMismatchIsAnInputError) {
  const InstanceDescription d = parse_instance(R"({
    "algebras": {"left": {"blocks": [2]}, "right": {"blocks": [2]}},
    "element": {"coefficients": [["1", "0"]]}
  })");
  EXPECT_THROW(build_element<GaussianRational>(d), InputError);
}

template <Scalar F>
CertificateDocument<F> sample_document() {
  RationalSampler rs(71);
  const auto pair = random_twist_pair<F>(2, rs);
  const auto e = make_twisted(pair.r, pair.s, false);
  const auto cert = certify(e);
  CertificateDocument<F> doc;
  doc.instance = json{{"mode", "exact"}};
  doc.scalar_mode = std::string(scalar_traits<F>::name);
  doc.seed = 99;
  doc.command = "verify";
  fill_from_certificate(doc, cert);
  doc.pairing = Matrix<F>::identity(4);
  doc.blocks.push_back({0, 2, "separability_idempotent", pair.r, pair.s});
  doc.elapsed_ms = 1.5;
  return doc;
}

TEST(CertificateDocument, ExactRoundTripIsLossless) {
  const auto doc = sample_document<GaussianRational>();
  ASSERT_TRUE(doc.antipode_bc.has_value());
  ASSERT_TRUE(doc.left_integral.has_value());
  const auto back = certificate_from_json<GaussianRational>(json::parse(to_json(doc).dump()));
  EXPECT_TRUE(back == doc);
}

TEST(CertificateDocument, FloatRoundTripIsLossless) {
  const auto doc = sample_document<Complex>();
  const auto back = certificate_from_json<Complex>(json::parse(to_json(doc).dump()));
  EXPECT_TRUE(back == doc);
}

TEST(CertificateDocument, RejectedCertificateCarriesReason) {
  CertificateDocument<GaussianRational> doc;
  fill_from_certificate(doc, certify(make_nonfull_counterexample<GaussianRational>(2)));
  EXPECT_EQ(doc.mode, "rejected");
  EXPECT_FALSE(doc.full);
  EXPECT_FALSE(doc.reason.empty());
  const json j = to_json(doc);
  EXPECT_EQ(j.at("verdict").at("mode"), "rejected");
}

}  // namespace
}  // namespace sepidem::cli
