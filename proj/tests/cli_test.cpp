#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "houe/cli.hpp"

namespace houe {
namespace {

using cli::Command;
using cli::RunConfig;

std::string fixture(const std::string& name) { return std::string(HOUE_FIXTURE_DIR) + "/" + name; }

nlohmann::json manifest() {
  std::ifstream in(fixture("manifest.json"));
  return nlohmann::json::parse(in);
}

Command command_of(const std::string& c) {
  if (c == "prove") return Command::Prove;
  if (c == "unify") return Command::Unify;
  if (c == "houe") return Command::Houe;
  return Command::Correct;
}

TEST(Cli, ManifestVerdicts) {
  for (const auto& f : manifest()["fixtures"]) {
    RunConfig c;
    c.command = command_of(f["command"]);
    c.input = fixture(f["file"]);
    cli::RunOutput o = cli::run(c);
    EXPECT_EQ(o.status, f["exit"].get<int>()) << f["name"];
    std::string status = f["status"];
    EXPECT_NE(o.out.find(status + "\n"), std::string::npos) << f["name"] << "\n" << o.out;
    if (f.contains("readings")) {
      std::size_t lines = 0;
      for (std::size_t at = 0; (at = o.out.find("\nAn := ", at)) != std::string::npos; ++at) ++lines;
      if (o.out.rfind("An := ", 0) == 0) ++lines;
      EXPECT_EQ(lines, f["readings"].get<std::size_t>()) << f["name"];
    }
  }
}

TEST(Cli, CorrectReport) {
  RunConfig c;
  c.input = fixture("e1");
  cli::RunOutput o = cli::run(c);
  EXPECT_EQ(o.status, cli::kSuccess);
  EXPECT_EQ(o.out.rfind("An := lam x:e. like(x, m)\n", 0), 0u) << o.out;
  c.input = fixture("e2");
  o = cli::run(c);
  EXPECT_EQ(o.status, cli::kNegative);
  EXPECT_EQ(o.out, "ILL-FORMED\n");
}

TEST(Cli, ProveTrace) {
  RunConfig c;
  c.command = Command::Prove;
  c.trace = true;
  c.input = fixture("disjunction_theorem");
  cli::RunOutput o = cli::run(c);
  EXPECT_EQ(o.status, cli::kSuccess);
  EXPECT_NE(o.out.find("CLOSE 0.1 [X1=a]"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("CLOSE 0.2 [X2=b]"), std::string::npos) << o.out;
}

TEST(Cli, ResourceLimitAndInputErrors) {
  RunConfig c;
  c.input = fixture("e20d");
  c.bounds.node_budget = 5;
  EXPECT_EQ(cli::run(c).status, cli::kResourceLimit);
  c.bounds.node_budget = 0;
  EXPECT_EQ(cli::run(c).status, cli::kInputError);
  c.bounds = {};
  c.input = fixture("missing");
  cli::RunOutput o = cli::run(c);
  EXPECT_EQ(o.status, cli::kInputError);
  EXPECT_NE(o.err.find("Io"), std::string::npos);
}

TEST(Cli, MachineRecords) {
  RunConfig c;
  c.input = fixture("e6");
  c.machine = true;
  cli::RunOutput o = cli::run(c);
  std::vector<nlohmann::json> recs;
  std::size_t start = 0;
  for (std::size_t nl; (nl = o.out.find('\n', start)) != std::string::npos; start = nl + 1) {
    recs.push_back(nlohmann::json::parse(o.out.substr(start, nl - start)));
  }
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["substitution"]["X"], "j");
  EXPECT_EQ(recs[0]["classification"], "strict");
  EXPECT_EQ(recs[1]["classification"], "sloppy");
  EXPECT_EQ(recs[0]["justification"].size(), 2u);
  EXPECT_EQ(recs[2]["type"], "result");
  EXPECT_EQ(recs[2]["exit"], 0);
}

TEST(Cli, SeedDirectoryLookup) {
  EXPECT_EQ(cli::resolve_input("e10", HOUE_FIXTURE_DIR), std::filesystem::path(fixture("e10.houe")));
  EXPECT_EQ(cli::resolve_input("nowhere", HOUE_FIXTURE_DIR), std::filesystem::path("nowhere"));
}

TEST(Cli, RepeatedRunsAreIdentical) {
  RunConfig c;
  c.trace = true;
  c.input = fixture("e20a");
  EXPECT_EQ(cli::run(c).out, cli::run(c).out);
}

int exit_code(const std::string& args) {
  std::string cmd = std::string(HOUE_BIN) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

TEST(Cli, BinaryExitStatus) {
  EXPECT_EQ(exit_code("correct " + fixture("e1")), 0);
  EXPECT_EQ(exit_code("correct " + fixture("e2")), 1);
  EXPECT_EQ(exit_code("--budget 5 correct " + fixture("e20d")), 2);
  EXPECT_EQ(exit_code("correct --gamma 2 " + fixture("e20d")), 0);
  EXPECT_EQ(exit_code("correct " + fixture("missing")), 3);
  EXPECT_EQ(exit_code("correct --budget 0 " + fixture("e1")), 3);
  EXPECT_EQ(exit_code("--machine --trace prove " + fixture("disjunction_theorem")), 0);
}

}  // namespace
}  // namespace houe
