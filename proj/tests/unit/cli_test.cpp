// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sepidem_cli/commands.hpp"

namespace sepidem::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("sepidem_cli_" + std::string(info->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string construct(const std::string& name, ConstructOptions opts) {
    opts.out_path = (dir_ / name).string();
    std::ostringstream err;
    EXPECT_EQ(run_construct(opts, err), kExitSeparability) << err.str();
    return opts.out_path;
  }

  fs::path dir_;
};

ConstructOptions kind(const std::string& k, std::size_t n = 0) {
  ConstructOptions o;
  o.kind = k;
  o.n = n;
  return o;
}

TEST_F(CliTest, VerifyCanonicalElementExitsZero) {
  const std::string path = construct("e0.json", kind("E0", 2));
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(path, {}, out, err), kExitSeparability) << err.str();
  const json doc = json::parse(out.str());
  EXPECT_EQ(doc.at("verdict").at("mode"), "separability_idempotent");
  EXPECT_EQ(doc.at("derived").at("left_integral"), json::array({"2", "0", "0", "2"}));
  EXPECT_TRUE(doc.at("checks").at("star_self_adjoint").at("passed").get<bool>());
  EXPECT_TRUE(doc.at("checks").at("cauchy_bound").at("passed").get<bool>());
}

TEST_F(CliTest, VerifyNonFullExitsOne) {
  const std::string path = construct("nonfull.json", kind("nonfull", 2));
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(path, {}, out, err), kExitRejected);
  const json doc = json::parse(out.str());
  EXPECT_EQ(doc.at("verdict").at("mode"), "rejected");
  EXPECT_FALSE(doc.at("verdict").at("full").get<bool>());
}

TEST_F(CliTest, SquareZeroInstanceExitsThree) {
  ConstructOptions o = kind("twisted");
  o.r = R"([["1","0"],["0","1"]])";
  o.s = R"([["1","0"],["0","-1"]])";
  const std::string path = construct("nil.json", o);
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(path, {}, out, err), kExitNilpotent);
  std::ostringstream out2, err2;
  EXPECT_EQ(run_derive(path, "integrals", {}, out2, err2), kExitNilpotent);
  EXPECT_NE(err2.str().find("RefusedForMode"), std::string::npos) << err2.str();
  std::ostringstream out3, err3;
  EXPECT_EQ(run_derive(path, "antipodes", {}, out3, err3), kExitNilpotent);
  EXPECT_TRUE(json::parse(out3.str()).at("derived").contains("antipode_bc"));
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(write("bad.json", "{ \"element\": "), {}, out, err), kExitInputError);
  EXPECT_NE(err.str().find("line"), std::string::npos) << err.str();
  std::ostringstream out2, err2;
  EXPECT_EQ(run_verify((dir_ / "missing.json").string(), {}, out2, err2), kExitInputError);
  std::ostringstream out3, err3;
  EXPECT_EQ(run_derive(write("e.json", R"({"element":{"construction":{"kind":"E0","n":1}}})"), "bogus", {}, out3,
                       err3),
            kExitInputError);
}

TEST_F(CliTest, DeriveDualEmitsPairingAndPlancherel) {
  ConstructOptions o = kind("involutive_twisted");
  o.r = R"([["7/5","0"],["0","1/5"]])";
  const std::string path = construct("inv.json", o);
  std::ostringstream out, err;
  ASSERT_EQ(run_derive(path, "dual", {}, out, err), kExitSeparability) << err.str();
  const json doc = json::parse(out.str());
  const auto& derived = doc.at("derived");
  ASSERT_TRUE(derived.contains("pairing"));
  ASSERT_TRUE(derived.contains("plancherel"));
  EXPECT_EQ(derived.at("plancherel").at(0).at(0), "50/49");
}

TEST_F(CliTest, DeriveModularAndIntegralsOnTwist) {
  ConstructOptions o = kind("twisted");
  o.r = R"([["1","1"],["0","1"]])";
  o.s = R"([["1","0"],["0","1"]])";
  const std::string path = construct("tw.json", o);
  for (const char* what : {"integrals", "antipodes", "modular", "dual"}) {
    std::ostringstream out, err;
    EXPECT_EQ(run_derive(path, what, {}, out, err), kExitSeparability) << what << ": " << err.str();
    EXPECT_NO_THROW(json::parse(out.str()));
  }
  // Not self-adjoint, so no Plancherel matrix.
  std::ostringstream out, err;
  ASSERT_EQ(run_derive(path, "dual", {}, out, err), kExitSeparability);
  EXPECT_FALSE(json::parse(out.str()).at("derived").contains("plancherel"));
}

TEST_F(CliTest, FloatModeOverrideAgreesWithExact) {
  RunOptions fl;
  fl.mode = ScalarMode::float64;
  ConstructOptions o = kind("twisted", 3);
  o.seed = 17;
  const std::string path = construct("rand.json", o);
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(path, fl, out, err), kExitSeparability) << err.str();
  const json doc = json::parse(out.str());
  EXPECT_EQ(doc.at("scalar_mode"), "float64");
  EXPECT_TRUE(doc.at("derived").at("left_integral").at(0).is_number());
}

TEST_F(CliTest, DecomposeDirectSum) {
  ConstructOptions o = kind("direct_sum");
  o.components = R"([{"kind":"E0","n":1},{"kind":"involutive_twisted","r":[["7/5","0"],["0","1/5"]]}])";
  const std::string path = construct("sum.json", o);
  std::ostringstream out, err;
  ASSERT_EQ(run_decompose(path, {}, out, err), kExitSeparability) << err.str();
  const json doc = json::parse(out.str());
  ASSERT_EQ(doc.at("blocks").size(), 2u);
  EXPECT_EQ(doc.at("blocks").at(1).at("size"), 2);
}

TEST_F(CliTest, DecomposeTamperedCrossBlockExitsOne) {
  ConstructOptions o = kind("direct_sum");
  o.components = R"([{"kind":"E0","n":1},{"kind":"E0","n":2}])";
  o.explicit_coefficients = true;
  const std::string path = construct("sum.json", o);
  std::ifstream in(path);
  json doc = json::parse(in);
  doc["element"]["coefficients"][0][1] = "1/3";
  const std::string tampered = write("tampered.json", doc.dump());
  std::ostringstream out, err;
  EXPECT_EQ(run_decompose(tampered, {}, out, err), kExitRejected) << err.str();
}

TEST_F(CliTest, DecomposeWithoutStarIsInputError) {
  const std::string path = write("nostar.json", R"({
    "algebras": {"left": {"blocks": [1], "star": false}, "right": {"blocks": [1], "star": false}},
    "element": {"coefficients": [["1"]]}
  })");
  std::ostringstream out, err;
  EXPECT_EQ(run_decompose(path, {}, out, err), kExitInputError);
}

TEST_F(CliTest, ConstructIsDeterministicForSeed) {
  ConstructOptions o = kind("twisted", 2);
  o.seed = 5;
  const InstanceDescription a = construct_instance(o);
  const InstanceDescription b = construct_instance(o);
  EXPECT_EQ(instance_to_json(a), instance_to_json(b));
  o.seed = 6;
  EXPECT_NE(instance_to_json(construct_instance(o)), instance_to_json(a));
  EXPECT_THROW(construct_instance(kind("E0")), InputError);
  EXPECT_THROW(construct_instance(kind("hexagon", 2)), InputError);
}

#ifdef SEPIDEM_CLI_BINARY
int run_binary(const std::string& args) {
  const std::string cmd = std::string(SEPIDEM_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryExitCodesFollowMode) {
  const std::string e0 = (dir_ / "e0.json").string();
  const std::string nonfull = (dir_ / "nf.json").string();
  const std::string nil = (dir_ / "nil.json").string();
  EXPECT_EQ(run_binary("construct --kind=E0 --n=2 --out=" + e0), 0);
  EXPECT_EQ(run_binary("construct --kind=nonfull --n=2 --out=" + nonfull), 0);
  EXPECT_EQ(run_binary("construct --kind=twisted --r='[[\"1\",\"0\"],[\"0\",\"1\"]]' --s='[[\"1\",\"0\"],[\"0\",\"-1\"]]' "
                       "--out=" + nil),
            0);
  EXPECT_EQ(run_binary("verify " + e0), 0);
  EXPECT_EQ(run_binary("--mode=float --tol=1e-10 verify " + e0), 0);
  EXPECT_EQ(run_binary("verify " + nonfull), 1);
  EXPECT_EQ(run_binary("verify " + nil), 3);
  EXPECT_EQ(run_binary("derive " + nil + " --what=modular"), 3);
  EXPECT_EQ(run_binary("verify " + (dir_ / "absent.json").string()), 2);
  EXPECT_EQ(run_binary("derive " + e0 + " --what=everything"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("--mode=quad verify " + e0), 2);
}
#endif

}  // namespace
}  // namespace sepidem::cli
