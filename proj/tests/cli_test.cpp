/*
 * Copyright (c) 2026, The gscbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/


#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gsc/cli.hpp"
#include "gsc/io.hpp"
#include "gsc/fixtures.hpp"

namespace gsc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gscbench");
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return std::string(GSC_FIXTURE_DIR) + "/" + name + ".json"; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gsc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, CheckVerdicts) {
  EXPECT_EQ(run({"check", fx("fig3a")}).code, kExitMember);
  const CliRun d = run({"check", fx("fig3d")});
  EXPECT_EQ(d.code, kExitNonMember);
  EXPECT_NE(d.out.find("non-member"), std::string::npos);
}

TEST_F(CliTest, CheckModelPresets) {
  const CliRun r = run({"check", fx("fig3a"), "--model", "tso"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("fence preset violated"), std::string::npos);
  EXPECT_EQ(run({"check", fx("fig3a"), "--model", "tso", "--apply-preset"}).code, kExitNonMember);
  EXPECT_EQ(run({"check", fx("fig3a"), "--model", "dual-tso", "--apply-preset"}).code, kExitMember);
  EXPECT_EQ(run({"check", fx("fig3a"), "--model", "lin", "--apply-preset"}).code, kExitNonMember);
  EXPECT_EQ(run({"check", fx("fig3a"), "--model", "nope"}).code, kExitInputError);
}

TEST_F(CliTest, CheckWritesWitness) {
  EXPECT_EQ(run({"check", fx("fig3b"), "--witness-out", tmp("w.json")}).code, kExitMember);
  const ExecutionDoc d = parse_execution(read_text_file(tmp("w.json")));
  EXPECT_TRUE(same_history(d.execution.history, fig3b()));
}

TEST_F(CliTest, SimulateReproducesFig3a) {
  EXPECT_EQ(run({"simulate", fx("a1-schedule"), "--history-out", tmp("h.json")}).code, kExitMember);
  EXPECT_TRUE(same_history(parse_history(read_text_file(tmp("h.json"))).history, fig3a()));
}

TEST_F(CliTest, SynthesizeThenSimulate) {
  const CliRun s = run({"synthesize", fx("fig3c-witness"), "-o", tmp("s.json")});
  EXPECT_EQ(s.code, kExitMember);
  EXPECT_NE(s.out.find("round-trip verified"), std::string::npos);
  EXPECT_EQ(run({"simulate", tmp("s.json"), "--history-out", tmp("h.json")}).code, kExitMember);
  EXPECT_TRUE(same_history(parse_history(read_text_file(tmp("h.json"))).history, fig3c()));
}

TEST_F(CliTest, Compose) {
  EXPECT_EQ(run({"compose", fx("fig5"), fx("fig5-x"), fx("fig5-y"), "-o", tmp("c.json")}).code,
            kExitMember);
  const CliRun d = run({"compose", fx("fig3d"), fx("fig3d-x"), fx("fig3d-y")});
  EXPECT_EQ(d.code, kExitInputError);
  EXPECT_NE(d.err.find("not well-fenced"), std::string::npos);
}

TEST_F(CliTest, Equiv) {
  EXPECT_EQ(run({"equiv", fx("fig3a-witness"), "--push-out", tmp("p.json"), "--pull-out", tmp("q.json")})
                .code,
            kExitMember);
  EXPECT_TRUE(fs::exists(tmp("p.json")));
  EXPECT_TRUE(fs::exists(tmp("q.json")));
}

TEST_F(CliTest, Enumerate) {
  const CliRun r = run({"enumerate", "--ops", "1", "--objects", "1", "--fences", "none",
                        "--out", tmp("out")});
  EXPECT_EQ(r.code, kExitMember);
  EXPECT_NE(r.out.find("executions failing an axiom: 0"), std::string::npos);
  EXPECT_FALSE(fs::is_empty(tmp("out")));
  EXPECT_EQ(run({"enumerate", "--fences", "bogus"}).code, kExitInputError);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"check", tmp("missing.json")}).code, kExitInputError);
  write_text_file(tmp("bad.json"), "{\"events\": }");
  const CliRun r = run({"check", tmp("bad.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find(":1:12:"), std::string::npos) << r.err;
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
}

}  // namespace
}  // namespace gsc
