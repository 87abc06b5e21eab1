// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace lagmat::cli {
namespace {

std::string data(const std::string& name) {
  return std::string(LAGMAT_EXAMPLES_DIR) + "/" + name;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, BasesOfB1) {
  const auto r = invoke({"bases", data("b1.rep")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "1\n1*\n");
}

TEST(Cli, BasesAsJson) {
  const auto r = invoke({"--format", "json", "bases", data("b1.rep")});
  ASSERT_EQ(r.code, kExitPass);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["bases"].size(), 2u);
  EXPECT_EQ(j["bases"][1][0], "1*");
}

TEST(Cli, SymplecticFailureHasWitness) {
  const auto r =
      invoke({"check", "--axiom", "symplectic", data("not_symplectic.bases")});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_EQ(r.out.rfind("FAIL symplectic\n", 0), 0u);
  EXPECT_NE(r.out.find("ordering: "), std::string::npos);
  EXPECT_NE(r.out.find("incomparable: 1 2 | 3 1*"), std::string::npos);
}

TEST(Cli, AxiomsOnRepresentation) {
  for (const char* axiom : {"orthogonal", "strong-exchange",
                            "symmetric-exchange", "oriented-even-delta"}) {
    const auto r = invoke({"check", "--axiom", axiom, data("d3.rep")});
    EXPECT_EQ(r.code, kExitPass) << axiom << "\n" << r.out << r.err;
  }
}

TEST(Cli, WitnessIsSymplecticButNotOrthogonal) {
  EXPECT_EQ(invoke({"check", "--axiom", "symplectic", data("witness.bases")})
                .code,
            kExitPass);
  EXPECT_EQ(invoke({"check", "--axiom", "orthogonal", data("witness.bases")})
                .code,
            kExitFail);
}

TEST(Cli, OrientB1) {
  const auto r = invoke({"orient", data("b1.rep")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("+ 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("+ 1*\n"), std::string::npos);
  EXPECT_EQ(parse_signmap(r.out), orient_bn(parse_representation(
                                      "kind: general\nn: 1\nm: 1\nk: 1\n"
                                      "-2 1 2\n")));
}

TEST(Cli, ExplodeRoundTripsThroughTheParser) {
  const auto r = invoke({"explode", data("b1.rep")});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const Representation big = parse_representation(r.out);
  EXPECT_EQ(big.kind(), Kind::Orthogonal);
  EXPECT_EQ(big.n(), 2);
  EXPECT_EQ(big.m(), 0);
  EXPECT_TRUE(check_isotropy(big));
  EXPECT_TRUE(is_orthogonal_matroid(extract_bases(big)).holds);
}

TEST(Cli, DecomposeThenGlue) {
  const auto r = invoke({"decompose", data("b1.rep")});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  ASSERT_EQ(r.out.rfind("PAIR\n", 0), 0u);
  const auto sep = r.out.find("---\n");
  ASSERT_NE(sep, std::string::npos);
  const std::string first = r.out.substr(5, sep - 5);
  const std::string second = r.out.substr(sep + 4);
  const auto f1 = temp_file("lagmat_cli_first.rep", first);
  const auto f2 = temp_file("lagmat_cli_second.rep", second);

  const auto glued = invoke({"pair-glue", f1, f2});
  ASSERT_EQ(glued.code, kExitPass) << glued.err;
  EXPECT_EQ(extract_bases(parse_representation(glued.out)),
            extract_bases(parse_representation(
                "kind: general\nn: 1\nm: 1\nk: 1\n-2 1 2\n")));

  const auto check = invoke({"pair-check", f1, f2});
  EXPECT_EQ(check.code, kExitPass) << check.out << check.err;
  EXPECT_EQ(invoke({"check", "--axiom", "pair", f1, f2}).code, kExitPass);
}

TEST(Cli, DecomposeNeedsAnExtraColumn) {
  const auto r = invoke({"decompose", data("d3.rep")});
  EXPECT_EQ(r.code, kExitInput);
}

TEST(Cli, MalformedInputIsAnInputError) {
  const auto path = temp_file("lagmat_cli_bad.rep",
                              "kind: general\nn: 1\nm: 1\nk: 1\n-2 x 2\n");
  const auto r = invoke({"bases", path});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("line 5, column 4"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileAndBadFlags) {
  EXPECT_EQ(invoke({"bases", data("absent.rep")}).code, kExitInput);
  EXPECT_EQ(invoke({"check", "--axiom", "matroid", data("d3.rep")}).code,
            kExitInput);
  EXPECT_EQ(invoke({"--format", "xml", "bases", data("b1.rep")}).code,
            kExitInput);
  EXPECT_EQ(invoke({}).code, kExitInput);
}

TEST(Cli, MaxNGuardsTheScans) {
  const auto r = invoke(
      {"--max-n", "2", "check", "--axiom", "symplectic", data("witness.bases")});
  EXPECT_EQ(r.code, kExitInput);
}

TEST(Cli, OracleSuitePasses) {
  for (const char* n : {"2", "3"}) {
    const auto r = invoke({"--seed", "7", "oracle", "--n", n, "--trials", "5"});
    EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(Cli, OutputIsByteStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"orient", data("d3.rep")},
        std::vector<std::string>{"--format", "json", "orient", data("d3.rep")},
        std::vector<std::string>{"--seed", "11", "oracle", "--trials", "3"}}) {
    const auto first = invoke(args);
    const auto second = invoke(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
  }
}

}  // namespace
}  // namespace lagmat::cli
