// Copyright 2026 The vmu Authors
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


// End-to-end checks of the command-line tool. The binary path comes from the
// build system through VMU_CLI.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "vmu/io.hpp"
#include "vmu/json_io.hpp"
#include "vmu/protocol.hpp"

namespace vmu {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(VMU_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("vmu_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ConstructProjective) {
  const CliRun r = run("construct --projective 2");
  ASSERT_EQ(r.code, 0);
  const auto parsed = parse_edge_list(r.out);
  EXPECT_EQ(parsed.graph.size(), 14U);
  EXPECT_EQ(parsed.graph.edge_count(), 21U);
  EXPECT_NE(r.out.find("# vmu 0.1.0"), std::string::npos);
  EXPECT_NE(r.out.find("# seed: 0"), std::string::npos);
}

TEST_F(Cli, ConstructIsDeterministicAndRoundTrips) {
  const CliRun a = run("construct --random 6 7 --seed 11");
  const CliRun b = run("construct --random 6 7 --seed 11");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto parsed = parse_edge_list(a.out);
  EXPECT_EQ(parse_edge_list(format_edge_list(parsed.graph)).graph, parsed.graph);
  EXPECT_EQ(parsed.graph.tag().kind, Provenance::RandomBipartite);
}

TEST_F(Cli, VerifyFullSweepAtQ3) {
  ASSERT_EQ(run("construct --projective 3 -o " + path("g3.el")).code, 0);
  const CliRun r = run("verify vmu --graph " + path("g3.el") + " --k 2 --method full");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, VerifyFailureExitsOne) {
  write_text_file(path("k2.el"), "2 1\n0 1\n");
  EXPECT_EQ(run("oracle vmu --g " + path("k2.el") + " --k 2").code, 1);
  ASSERT_EQ(run("construct --projective 2 -o " + path("g2.el")).code, 0);
  EXPECT_EQ(run("verify vmu --graph " + path("g2.el") + " --k 3 --method oneside").code, 1);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("construct --projective 2 --bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("construct --projective 6").code, 2);
  EXPECT_EQ(run("synth --graph /nonexistent/file --k 0,1").code, 2);
  EXPECT_EQ(run("bound --k 3 --left 18 --right 16").code, 2);
}

TEST_F(Cli, SynthEmitVerifyPipeline) {
  ASSERT_EQ(run("construct --projective 2 -o " + path("g2.el")).code, 0);
  ASSERT_EQ(run("synth --graph " + path("g2.el") + " --k 0,3 --edges 0-3 -o " + path("cert.txt") + " --json " +
                path("cert.json"))
                .code,
            0);
  EXPECT_EQ(run("verify cert --graph " + path("g2.el") + " --cert " + path("cert.json")).code, 0);
  const auto cert = certificate_from_json(Json::parse(read_text_file(path("cert.json"))));
  EXPECT_EQ(cert.k, (std::vector<Vertex>{0, 3}));
  const auto steps = parse_steps(read_text_file(path("cert.txt")));
  EXPECT_EQ(steps, cert.steps);

  // A small host keeps the protocol verifiable.
  write_text_file(path("p3.el"), "3 2\nlabels 1 2 3\n1 2\n2 3\n");
  write_text_file(path("steps.txt"), "LC 2\nDEL 2\n");
  write_text_file(path("t.el"), "2 1\nlabels 1 3\n1 3\n");
  ASSERT_EQ(run("emit-protocol --graph " + path("p3.el") + " --steps " + path("steps.txt") + " -o " +
                path("proto.txt"))
                .code,
            0);
  const auto proto = parse_protocol(read_text_file(path("proto.txt")));
  EXPECT_EQ(proto.measurement_count(), 1U);
  EXPECT_EQ(run("verify-protocol --graph " + path("p3.el") + " --protocol " + path("proto.txt") + " --target " +
                path("t.el"))
                .code,
            0);
  write_text_file(path("wrong.el"), "2 0\nlabels 1 3\n");
  EXPECT_EQ(run("verify-protocol --graph " + path("p3.el") + " --protocol " + path("proto.txt") + " --target " +
                path("wrong.el"))
                .code,
            1);
  const CliRun js = run("emit-protocol --graph " + path("p3.el") + " --steps " + path("steps.txt") + " --json");
  ASSERT_EQ(js.code, 0);
  EXPECT_EQ(parse_protocol_any(js.out), proto);
}

TEST_F(Cli, BoundTableAndMonteCarlo) {
  const CliRun b = run("bound --k 3 --left 18 --right 18 --csv");
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("chernoff"), std::string::npos);
  const CliRun t = run("table --k 3..4 --evaluator exact");
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("k,total,left,right,bound"), std::string::npos);
  EXPECT_NE(t.out.find("\n3,82,21,61,"), std::string::npos) << t.out;
  const CliRun m1 = run("mc --left 10 --right 12 --k 3 --graphs 3 --trials 5 --seed 4");
  const CliRun m2 = run("mc --left 10 --right 12 --k 3 --graphs 3 --trials 5 --seed 4 --threads 1");
  ASSERT_EQ(m1.code, 0);
  EXPECT_NE(m1.out.find("seed: 4"), std::string::npos);
  // Only the echoed command line differs.
  EXPECT_EQ(m1.out.substr(m1.out.find("seed:")), m2.out.substr(m2.out.find("seed:")));
}

TEST_F(Cli, OracleVertexMinor) {
  write_text_file(path("p3.el"), "3 2\nlabels 1 2 3\n1 2\n2 3\n");
  write_text_file(path("k2.el"), "2 1\nlabels 1 3\n1 3\n");
  EXPECT_EQ(run("oracle vm --g " + path("p3.el") + " --h " + path("k2.el")).code, 0);
  write_text_file(path("e.el"), "2 0\nlabels 1 2\n");
  write_text_file(path("edge.el"), "2 1\nlabels 1 2\n1 2\n");
  EXPECT_EQ(run("oracle vm --g " + path("edge.el") + " --h " + path("e.el")).code, 1);
}

}  // namespace
}  // namespace vmu
