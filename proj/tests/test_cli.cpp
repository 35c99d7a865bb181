// Copyright 2026 The oec Authors
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

#include <cstdlib>
#include <sstream>

#include "oec/cli.hpp"

namespace {

using oec::Json;
using oec::RunConfig;

struct Outcome {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(const RunConfig& config) {
  std::ostringstream out, err;
  const int status = oec::run(config, out, err);
  return {status, out.str(), err.str()};
}

std::string samples() {
  const char* dir = std::getenv("OEC_SAMPLES");
  return dir ? dir : "samples";
}

const Json* find_result(const Json& report, const std::string& engine, const std::string& key = "") {
  for (const auto& r : report["results"])
    if (r["engine"] == engine && (key.empty() ? !r.contains("key") : r.value("key", "") == key)) return &r;
  return nullptr;
}

TEST(Cli, LieCircleQuotient) {
  RunConfig c;
  c.command = "lie";
  c.model = "S1/Z_4";
  c.k = 3;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["command"], "lie");
  EXPECT_EQ(j["inputs"]["model"], "S1/Z_4");
  ASSERT_NE(find_result(j, "integral"), nullptr);
  EXPECT_EQ((*find_result(j, "integral"))["value"], 64);
  EXPECT_EQ(j["agreement"], true);
}

TEST(Cli, SeriesMacdonald) {
  RunConfig c;
  c.command = "series";
  c.k = 0;
  c.euler = "2";
  c.degree = 4;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ((*find_result(j, "product"))["value"], Json::parse("[1,2,3,4,5]"));
  EXPECT_EQ((*find_result(j, "macdonald"))["value"], Json::parse("[1,2,3,4,5]"));
}

TEST(Cli, VerifyPartitions) {
  for (bool shortcut : {false, true}) {
    RunConfig c;
    c.command = "verify";
    c.group = "Z_2";
    c.space = samples() + "/spaces/z2_swap.json";
    c.k = 1;
    c.degree = 5;
    c.use_lemma3_shortcut = shortcut;
    const auto o = run(c);
    ASSERT_EQ(o.status, 0) << o.err;
    const Json j = o.json();
    const Json partitions = Json::parse("[1,1,2,3,5,7]");
    EXPECT_EQ((*find_result(j, shortcut ? "lhs_lemma3" : "lhs"))["value"], partitions);
    EXPECT_EQ((*find_result(j, "rhs"))["value"], partitions);
    EXPECT_EQ(j["inputs"]["euler"], 1);
  }
}

TEST(Cli, ChiReportsEveryEngine) {
  RunConfig c;
  c.command = "chi";
  c.group = samples() + "/groups/s3_perm.json";
  c.space = samples() + "/spaces/s3_natural.json";
  c.k = 2;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  const Json j = o.json();
  const Json v = (*find_result(j, "recursion"))["value"];
  EXPECT_EQ((*find_result(j, "tuples"))["value"], v);
  EXPECT_EQ((*find_result(j, "orbit_types"))["value"], v);
  EXPECT_EQ(j["agreement"], true);
}

TEST(Cli, CayleyGroupWithTableAction) {
  RunConfig c;
  c.command = "chi";
  c.group = samples() + "/groups/z2xz2_cayley.json";
  c.space = samples() + "/spaces/z2xz2_on_pairs.json";
  c.k = 1;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_EQ(o.json()["inputs"]["group_order"], 4);
}

TEST(Cli, ProductGroupSpec) {
  RunConfig c;
  c.command = "chi";
  c.group = samples() + "/groups/z2_x_s3.json";
  c.space = "regular";
  c.k = 1;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_EQ((*find_result(o.json(), "recursion"))["value"], 1);
}

TEST(Cli, WreathTypeTable) {
  RunConfig c;
  c.command = "wreath";
  c.group = "Z_2";
  c.n = 2;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  const Json j = o.json();
  std::size_t types = 0, brute = 0;
  for (const auto& r : j["results"]) {
    if (r["engine"] == "types" && r["key"] != "total_class_size") ++types;
    if (r["engine"] == "brute_force") ++brute;
  }
  EXPECT_EQ(types, 5u);
  EXPECT_EQ(brute, 5u);
  EXPECT_EQ((*find_result(j, "types", "total_class_size"))["value"], 8);
}

TEST(Cli, WreathBeyondTheExplicitBudgetSkipsBruteForce) {
  RunConfig c;
  c.command = "wreath";
  c.group = "S_3";
  c.n = 4;
  c.explicit_budget = 100;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_NE(find_result(o.json(), "brute_force", "skipped"), nullptr);
}

TEST(Cli, CheckPaperFlagsTheDeviation) {
  RunConfig c;
  c.command = "lie";
  c.check_paper = true;
  c.k = 4;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  const Json j = o.json();
  const Json* row = find_result(j, "closed_form", "O2/SO2,k=1");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ((*row)["value"]["computed"], 0);
  EXPECT_EQ((*row)["value"]["closed_form"], 2);
  EXPECT_EQ((*row)["value"]["known_deviation"], true);
  EXPECT_EQ((*find_result(j, "closed_form", "O2/Z_5,k=4"))["value"]["agrees"], true);
}

TEST(Cli, CsvOutput) {
  RunConfig c;
  c.command = "series";
  c.k = 1;
  c.euler = "1";
  c.degree = 3;
  c.format = oec::OutputFormat::csv;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0);
  EXPECT_EQ(o.out,
            "command,engine,key,value\n"
            "series,product,0,1\n"
            "series,product,1,1\n"
            "series,product,2,2\n"
            "series,product,3,3\n"
            "series,agreement,,true\n");
}

TEST(Cli, ErrorsExitWithTwo) {
  RunConfig bad_group;
  bad_group.command = "chi";
  bad_group.group = "GL_3";
  bad_group.space = "regular";
  EXPECT_EQ(run(bad_group).status, 2);

  RunConfig bad_k;
  bad_k.command = "chi";
  bad_k.group = "Z_2";
  bad_k.space = "regular";
  bad_k.k = 9;
  EXPECT_EQ(run(bad_k).status, 2);

  RunConfig big_n;
  big_n.command = "series";
  big_n.degree = 65;
  EXPECT_EQ(run(big_n).status, 2);

  RunConfig unsupported;
  unsupported.command = "lie";
  unsupported.model = "O2/D_2";
  const auto o = run(unsupported);
  EXPECT_EQ(o.status, 2);
  EXPECT_NE(o.err.find("O2/D_2"), std::string::npos);

  RunConfig unknown;
  unknown.command = "plot";
  EXPECT_EQ(run(unknown).status, 2);

  RunConfig bad_json;
  bad_json.command = "chi";
  bad_json.group = "Z_2";
  bad_json.space = "{\"points\": 2, \"action\": {\"generators\": [[1, 1]]}}";
  EXPECT_EQ(run(bad_json).status, 2);

  RunConfig no_space;
  no_space.command = "verify";
  no_space.group = "Z_2";
  EXPECT_EQ(run(no_space).status, 2);
}

TEST(Cli, BudgetEnvironment) {
  RunConfig c;
  oec::apply_budget_env(c, "1000,50");
  EXPECT_EQ(c.tuple_budget, 1000u);
  EXPECT_EQ(c.explicit_budget, 50u);
  oec::apply_budget_env(c, "77");
  EXPECT_EQ(c.tuple_budget, 77u);
  EXPECT_EQ(c.explicit_budget, 50u);
  EXPECT_THROW(oec::apply_budget_env(c, "ten"), oec::InvalidArgument);
  EXPECT_THROW(oec::apply_budget_env(c, "0"), oec::InvalidArgument);
  EXPECT_NO_THROW(oec::apply_budget_env(c, nullptr));

  // a small tuple budget skips the tuple engine without failing
  RunConfig chi;
  chi.command = "chi";
  chi.group = "S_4";
  chi.space = "regular";
  chi.k = 2;
  chi.tuple_budget = 100;
  const auto o = run(chi);
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_NE(find_result(o.json(), "tuples", "skipped"), nullptr);
}

TEST(Cli, DeterministicAndSeeded) {
  RunConfig c;
  c.command = "verify";
  c.group = "D_4";
  c.random_orbits = 3;
  c.seed = 42;
  c.k = 2;
  c.degree = 4;
  const auto a = run(c);
  const auto b = run(c);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["inputs"]["seed"], 42);
}

TEST(Cli, InlineJsonInputs) {
  RunConfig c;
  c.command = "chi";
  c.group = R"({"kind":"named","name":"Z_3"})";
  c.space = R"({"points":3,"action":{"generators":[[1,2,0]]}})";
  c.k = 1;
  const auto o = run(c);
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_EQ((*find_result(o.json(), "recursion"))["value"], 1);
}

}  // namespace
