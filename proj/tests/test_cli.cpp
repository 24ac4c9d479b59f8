// Copyright 2026 The zonec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_util.hpp"
#include "zonec/cli.hpp"

namespace zonec {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "zonec");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("zonec_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

TEST(Cli, CompileGhz) {
  Result r = cli({"compile", "--bench", "ghz:4:fountain"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("boundary crossings: 2"), std::string::npos);
  EXPECT_NE(r.out.find("ld/st: 2"), std::string::npos);

  Result j = cli({"compile", "--bench", "ghz:4:fountain", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  testing::expect_golden("ghz4_fountain_compile.json", j.out);
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["boundary_crossings"].get<int>(), 2);
}

TEST(Cli, SimulateFormats) {
  Result h = cli({"simulate", "--bench", "ghz:5:path", "--mode", "standard"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_NE(h.out.find("fidelity:"), std::string::npos);
  Result j = cli({"simulate", "--bench", "ghz:5:path", "--format", "json", "--per-qubit"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(nlohmann::json::parse(j.out)["fidelity"]["qubits"].size(), 5u);
  Result c = cli({"simulate", "--bench", "ghz:5:path", "--format", "csv"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.rfind(report_csv_header() + "\n", 0), 0u);
}

TEST(Cli, OutputsAreDeterministic) {
  for (const char* cmd : {"compile", "simulate"}) {
    std::vector<std::string> args = {cmd, "--bench", "qaoa-pl:12:2", "--seed", "4", "--format", "json"};
    Result a = cli(args), b = cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, QasmAndPauliInputs) {
  std::string q = temp_file("in.qasm",
                            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncreg c[3];\nh q[0];\ncx q[0],q[1];\n"
                            "swap q[1],q[2];\nmeasure q -> c;\n");
  Result r = cli({"simulate", "--qasm", q, "--policy", "type2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::string p = temp_file("in.pauli", "qubits 3\nXXZ 0.4\nZIY -0.2\n");
  r = cli({"compile", "--pauli", p, "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, TimelineFileAndConfig) {
  auto tl = (std::filesystem::temp_directory_path() / "zonec_test_timeline.tsv").string();
  std::string cfg = temp_file("slow.cfg", "aod_speed = 0.275\n");
  Result fast = cli({"simulate", "--bench", "ghz:6:path", "--mode", "standard", "--format", "json"});
  Result slow = cli({"simulate", "--bench", "ghz:6:path", "--mode", "standard", "--format", "json", "--config",
                     cfg, "--timeline", tl});
  ASSERT_EQ(slow.code, 0) << slow.err;
  double f = nlohmann::json::parse(fast.out)["time_us"]["load_store"].get<double>();
  double s = nlohmann::json::parse(slow.out)["time_us"]["load_store"].get<double>();
  EXPECT_NEAR(s, 2 * f, 1e-6);
  EXPECT_NE(testing::read_text(tl).find("EC_PREP\t"), std::string::npos);
}

TEST(Cli, Sweep) {
  Result r = cli({"sweep", "--bench", "ghz:{n}:fountain", "--axis", "n=3,5,120,121", "--axis",
                  "policy=type1,type3", "--policy", "{policy}"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0].rfind("n,policy,status,", 0), 0u);
  std::size_t failed = 0;
  for (const auto& l : lines) failed += l.find(",failed,") != std::string::npos;
  EXPECT_EQ(failed, 2u);
  EXPECT_NE(r.err.find("capacity"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"compile"}).code, 1);
  EXPECT_EQ(cli({"compile", "--bench", "ghz:4:path", "--qasm", "x.qasm"}).code, 1);
  EXPECT_EQ(cli({"compile", "--bench", "ucc:6:4"}).code, 1);  // random family without seed
  EXPECT_EQ(cli({"compile", "--bench", "ghz:4:path", "--frobnicate"}).code, 1);
  EXPECT_EQ(cli({"compile", "--bench", "ghz:4:spiral"}).code, 2);
  EXPECT_EQ(cli({"compile", "--qasm", "/nonexistent.qasm"}).code, 2);
  EXPECT_EQ(cli({"compile", "--bench", "ghz:4:path", "--mode", "fast"}).code, 1);
  EXPECT_EQ(cli({"compile", "--bench", "ghz:4:path", "--config", temp_file("bad.cfg", "f_2q = 2\n")}).code, 2);
  Result cap = cli({"simulate", "--bench", "ghz:200:path"});
  EXPECT_EQ(cap.code, 3);
  EXPECT_NE(cap.err.find("capacity"), std::string::npos);
  std::string bad = temp_file("bad.qasm", "OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n");
  Result parse = cli({"compile", "--qasm", bad});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("3:1"), std::string::npos);
}

TEST(Cli, RunSpecValidation) {
  RunSpec s;
  EXPECT_THROW(check_run_spec(s), UsageError);
  s.bench = "po:6:1";
  EXPECT_THROW(check_run_spec(s), UsageError);
  s.seed = 1;
  EXPECT_NO_THROW(check_run_spec(s));
  s.pauli_path = "x";
  EXPECT_THROW(check_run_spec(s), UsageError);
}

}  // namespace
}  // namespace zonec
