// Copyright 2026 The painworth Authors
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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int exit_code;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into out when merge is set.
Run cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string("'") + PAINWORTH_CLI + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kDemo = std::string(PAINWORTH_DATA_DIR) + "/demo.json";
const std::string kDemoCsv = std::string(PAINWORTH_DATA_DIR) + "/demo.csv";

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

TEST(Cli, Validate) {
  auto r = cli("validate " + kDemo);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "demo: valid\n");
  EXPECT_EQ(cli("validate " + kDemoCsv).exit_code, 0);
  EXPECT_EQ(cli("validate /nonexistent.json").exit_code, 1);
}

TEST(Cli, InvalidInputExitsTwo) {
  std::string bad = ::testing::TempDir() + "painworth_bad.json";
  {
    std::ifstream in(kDemo);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    text.replace(text.find("\"0.8\""), 5, "\"1.2\"");
    std::ofstream(bad) << text;
  }
  auto r = cli("validate " + bad, true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(has(r.out, "OmegaOutOfRange"));
  EXPECT_EQ(cli("evaluate " + bad).exit_code, 2);
}

TEST(Cli, EvaluateTable) {
  auto r = cli("evaluate " + kDemo);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(has(r.out, "13'080.00"));
  EXPECT_TRUE(has(r.out, "19'475.00"));
  EXPECT_TRUE(has(r.out, "Subtotal operational pains | 6'520 | 4'700"));
}

TEST(Cli, EvaluateOperationalFee) {
  auto r = cli("evaluate " + kDemo + " --kind operational --share 0.5 --format json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(has(r.out, "\"fee\": \"5610.00\""));
  auto customer = cli("evaluate " + kDemo + " --ceiling-basis customer-only --format json");
  EXPECT_TRUE(has(customer.out, "\"price_ceiling\": \"7780.00\""));
  EXPECT_EQ(cli("evaluate " + kDemo + " --share 1.5").exit_code, 1);
}

TEST(Cli, CsvAndJsonInputsAgree) {
  auto a = cli("evaluate " + kDemo + " --format json");
  auto b = cli("evaluate " + kDemoCsv + " --format json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  auto piped = cli("evaluate - --format json < '" + kDemo + "'");
  EXPECT_EQ(piped.out, a.out);
}

TEST(Cli, GateExitCodes) {
  EXPECT_EQ(cli("gate " + kDemo + " --value-target 5000 --cost-budget 4000 --annual-cost 2000").exit_code, 0);
  EXPECT_EQ(cli("gate " + kDemo + " --value-target 20000 --cost-budget 4000 --annual-cost 2000").exit_code, 3);
  EXPECT_EQ(cli("gate " + kDemo + " --value-target 5000 --cost-budget 4000 --annual-cost 5000").exit_code, 4);
  EXPECT_EQ(cli("gate " + kDemo + " --kind structural --value-target 5000 --cost-budget 4000 --annual-cost 5000").exit_code, 5);
  EXPECT_EQ(cli("gate " + kDemo + " --cost-budget 4000").exit_code, 1);
  auto text = cli("gate " + kDemo + " --value-target 5000 --cost-budget 4000 --annual-cost 2000");
  EXPECT_TRUE(has(text.out, "Proceed"));
}

TEST(Cli, Sweep) {
  auto r = cli("sweep " + kDemo + " --kind operational --path 'pain(2).line(customer).alleviation' --from 0 --to 1 --steps 11");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(has(r.out, "0,8220.00\n"));
  EXPECT_TRUE(has(r.out, "1,13220.00\n"));
  EXPECT_EQ(cli("sweep " + kDemo + " --path 'pain(2).line(customer).alleviation' --from 0 --to 1 --steps 1").exit_code, 1);
  EXPECT_EQ(cli("sweep " + kDemo + " --path 'pain(2).line(nobody).alleviation' --from 0 --to 1 --steps 3").exit_code, 1);
}

TEST(Cli, BreakevenAndTornado) {
  auto be = cli("breakeven " + kDemo + " --kind operational --cost 5610 --format json");
  ASSERT_EQ(be.exit_code, 0);
  EXPECT_TRUE(has(be.out, "\"lambda\": \"0.5\""));
  EXPECT_TRUE(has(be.out, "\"lambda_max\": \"1.25\""));
  auto t = cli("tornado " + kDemo + " --rel 0.2");
  ASSERT_EQ(t.exit_code, 0);
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 22);
  EXPECT_EQ(cli("tornado " + kDemo + " --rel 0").exit_code, 1);
}

TEST(Cli, DemoMatchesBundledFixture) {
  std::ifstream in(kDemo);
  std::string fixture((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(cli("demo").out, fixture);
}

TEST(Cli, ServeNeedsDataDir) {
  EXPECT_EQ(cli("serve --data-dir /nonexistent/painworth --port 0").exit_code, 1);
}

}  // namespace
