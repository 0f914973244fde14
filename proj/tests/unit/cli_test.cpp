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

#include <gtest/gtest.h>

#include <sstream>

#include "forest_spectra/cli.hpp"

namespace cli = forest_spectra::cli;

namespace {

struct Invocation {
  int code;
  cli::Json report;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  cli::Json report;
  if (code != 2 && !out.str().empty() && out.str().front() == '{') report = cli::Json::parse(out.str());
  return {code, report, out.str(), err.str()};
}

std::string without_timing(std::string s) {
  const auto pos = s.find("\"timing_ms\"");
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

TEST(Cli, SpectrumCompleteFour) {
  const Invocation r = invoke({"spectrum", "--complete", "4", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& res = r.report["result"];
  EXPECT_EQ(res["spectrum"][0]["value"], "16/1");
  EXPECT_EQ(res["spectrum"][1]["value"], "-2/1");
  EXPECT_EQ(res["spectrum"][1]["multiplicity"], 2);
  EXPECT_EQ(res["spectrum"][2]["multiplicity"], 3);
  EXPECT_EQ(res["sign_profile"]["positive"], 1);
  EXPECT_EQ(res["sign_profile"]["negative"], 5);
  EXPECT_EQ(res["determinant"], "-4096/1");
  EXPECT_EQ(r.report["verdict"]["status"], "verified");
  EXPECT_EQ(r.report["command"], "spectrum --complete 4 --k 1");
}

TEST(Cli, SpectrumBipartiteBoundaryIsFlagged) {
  const Invocation r = invoke({"spectrum", "--bipartite", "2", "2", "--k", "2", "--matrix"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& res = r.report["result"];
  EXPECT_EQ(res["spectrum"][0]["value"], "3/1");
  EXPECT_EQ(res["spectrum"][1]["value"], "-1/1");
  EXPECT_EQ(res["spectrum"][1]["multiplicity"], 3);
  EXPECT_EQ(res["matrix"].size(), 4u);
  EXPECT_FALSE(res["in_theorem_range"].get<bool>());
  EXPECT_NE(r.report["verdict"]["notes"][0].get<std::string>().find("outside theorem range"), std::string::npos);
}

TEST(Cli, SlpCompleteFour) {
  const Invocation r = invoke({"slp", "--complete", "4", "--r", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report["result"]["strong_lefschetz"].get<bool>());
  EXPECT_EQ(r.report["result"]["hilbert_function"], cli::Json({1, 6, 6, 1}));
}

TEST(Cli, SlpWithCustomPoint) {
  const Invocation r = invoke({"slp", "--bipartite", "2", "2", "--r", "2", "--point", "1,2,3/2,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report["input"]["linear_form"][2], "3/2");
  EXPECT_EQ(invoke({"slp", "--complete", "4", "--r", "3", "--point", "1,2"}).code, 2);
}

TEST(Cli, BijectionsBothKinds) {
  const Invocation b = invoke({"bijections", "--bipartite", "3", "3", "--k", "2"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.report["result"]["bijections"].size(), 5u);
  EXPECT_TRUE(b.report["result"]["inequalities"]["p<r"].get<bool>());
  const Invocation c = invoke({"bijections", "--complete", "6", "--k", "2", "--w", "5"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.report["result"]["bijections"].size(), 2u);
  EXPECT_TRUE(c.report["result"]["decomposition"]["holds"].get<bool>());
  const Invocation boundary = invoke({"bijections", "--bipartite", "2", "3", "--k", "1"});
  EXPECT_EQ(boundary.code, 0);
  EXPECT_FALSE(boundary.report["result"]["inequalities"]["p<r"].get<bool>());
}

TEST(Cli, MatroidAndEnumerate) {
  const Invocation m = invoke({"matroid", "--complete", "5", "--r", "3", "--verify-axioms"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_TRUE(m.report["result"]["exchange_axiom"].get<bool>());
  const Invocation e = invoke({"enumerate", "--complete", "4", "--k", "2"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.report["result"]["count"], 15);
  EXPECT_EQ(e.report["result"]["forests"][0], "{1-2, 1-3} on {1,2,3,4}");
  const Invocation c = invoke({"enumerate", "--complete", "5", "--k", "1", "--count-only"});
  EXPECT_EQ(c.report["result"]["count"], 125);
  EXPECT_FALSE(c.report["result"].contains("forests"));
}

TEST(Cli, InvalidInputExitsTwo) {
  const Invocation unknown = invoke({"spectrum", "--complete", "4", "--k", "1", "--bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("spectrum"), std::string::npos);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--complete", "4", "--k", "9"}).code, 2);
  EXPECT_EQ(invoke({"bijections", "--complete", "3", "--k", "1", "--w", "4"}).code, 2);
  EXPECT_EQ(invoke({"bijections", "--complete", "6", "--k", "2"}).code, 2);
  EXPECT_EQ(invoke({"slp", "--complete", "4", "--r", "3", "--point", "1,x,1,1,1,1"}).code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"spectrum", "--bipartite", "3", "2", "--k", "1", "--matrix"};
  EXPECT_EQ(without_timing(invoke(args).out), without_timing(invoke(args).out));
  const std::vector<std::string> slp{"slp", "--complete", "5", "--r", "3"};
  EXPECT_EQ(without_timing(invoke(slp).out), without_timing(invoke(slp).out));
}
