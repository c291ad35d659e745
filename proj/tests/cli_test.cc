/*
 * Copyright 2026 The smartauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace smartauth::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "smartauth");
  std::ostringstream out, err;
  int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

bool Contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(CliRunTest, ImprovedHonestAccepts) {
  Result r = Invoke({"run", "--scheme", "improved", "--scenario", "honest",
                  "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "verdict: accept"));
  EXPECT_TRUE(Contains(r.out, "keys equal: yes"));
  EXPECT_TRUE(Contains(r.out, "reproduced: 1/1"));
}

TEST(CliRunTest, BaselineWrongPasswordChangeReportsCorruption) {
  Result r = Invoke({"run", "--scheme", "baseline", "--scenario",
                  "wrong-password-change", "--trials", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "card corrupted: subsequent logins rejected: 3/3"));
}

TEST(CliRunTest, ImprovedWrongPasswordChangeKeepsCard) {
  Result r = Invoke({"run", "--scheme", "improved", "--scenario",
                  "wrong-password-change", "--trials", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "password change rejected: card unchanged"));
}

TEST(CliRunTest, EveryScenarioReproduces) {
  for (const char* scheme : {"baseline", "improved"}) {
    for (ScenarioId id : kAllScenarios) {
      Result r = Invoke({"run", "--scheme", scheme, "--scenario",
                      std::string(ScenarioName(id)), "--trials", "3"});
      EXPECT_EQ(r.code, kExitOk) << scheme << " " << ScenarioName(id) << "\n"
                                 << r.err;
    }
  }
}

TEST(CliRunTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"launch"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--scheme", "quantum"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--scenario", "teleport"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--seed", "-3"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--hash", "md5"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"run", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"diff", "--scheme", "baseline"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"cost", "--trials", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliRunTest, SeedFromEnvironment) {
  ::setenv("SMARTAUTH_SEED", "41", 1);
  Result env = Invoke({"run", "--format", "structured-lines"});
  ::unsetenv("SMARTAUTH_SEED");
  Result flag = Invoke({"run", "--format", "structured-lines", "--seed", "41"});
  Result other = Invoke({"run", "--format", "structured-lines", "--seed", "42"});
  EXPECT_EQ(env.code, kExitOk);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(env.out, other.out);
}

TEST(CliRunTest, StructuredOutputIsDeterministicAndParseable) {
  std::vector<std::string> args = {"run", "--scheme", "baseline",
                                   "--scenario", "double-login", "--seed", "5",
                                   "--format", "structured-lines"};
  Result a = Invoke(args);
  Result b = Invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int events = 0;
  while (std::getline(lines, line)) {
    if (line.starts_with("# ")) continue;
    ++events;
    EXPECT_TRUE(line.starts_with("step=")) << line;
    EXPECT_TRUE(Contains(line, " actor=")) << line;
    EXPECT_TRUE(Contains(line, " kind=")) << line;
    EXPECT_TRUE(Contains(line, " fields=")) << line;
    EXPECT_TRUE(Contains(line, " verdict=")) << line;
  }
  EXPECT_GT(events, 0);
}

TEST(CliRunTest, OutWritesTranscriptFile) {
  auto path = std::filesystem::temp_directory_path() / "smartauth-cli-out.txt";
  std::filesystem::remove(path);
  Result r = Invoke({"run", "--seed", "3", "--out", path.string(), "--format",
                  "structured-lines"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  EXPECT_TRUE(content.starts_with("# ") || content.starts_with("step="));
  EXPECT_TRUE(Contains(content, "step=1 "));
  EXPECT_FALSE(Contains(r.out, "step=1 "));
  std::filesystem::remove(path);
}

TEST(CliDiffTest, DivergesExactlyWhereExpected) {
  Result r = Invoke({"diff", "--trials", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(Contains(r.out, "UNEXPECTED"));
  std::istringstream lines(r.out);
  std::string line;
  int diverging = 0;
  while (std::getline(lines, line)) {
    if (Contains(line, "diverge ")) {
      ++diverging;
      EXPECT_TRUE(line.starts_with("wrong-password")) << line;
    }
  }
  EXPECT_EQ(diverging, 2);
}

TEST(CliCostTest, ReportsDeltas) {
  Result r = Invoke({"cost"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "login+authentication delta: 2 (expected 2) ok"));
  EXPECT_TRUE(Contains(r.out, "storage delta: 32 bytes = 1 digest(s)"));
  Result toy = Invoke({"cost", "--hash", "toy-16"});
  EXPECT_EQ(toy.code, kExitOk) << toy.err;
  EXPECT_TRUE(Contains(toy.out, "storage delta: 2 bytes = 1 digest(s)"));
}

}  // namespace
}  // namespace smartauth::cli
