#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "roughalg/cli.hpp"
#include "support.hpp"

using namespace roughalg;
using testing_support::table_path;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string t(int k) { return table_path(k).string(); }

nlohmann::json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const CliResult r = run(std::move(args));
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, CheckReportsLabels) {
  const CliResult r = run({"check", t(2), "--axioms", "bo"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("BO: C1 ✓ C2 ✓ C5 ✓"), std::string::npos) << r.out;
}

TEST(Cli, CheckFailureExitsOne) {
  const CliResult r = run({"check", t(4), "--axioms", "z"});
  EXPECT_EQ(r.code, cli::kExitViolated);
  EXPECT_NE(r.out.find("C1 (x*x = 0) fails at (x=2), (x=3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("C6 (x*x = x) fails at (x=1)"), std::string::npos) << r.out;
}

TEST(Cli, CheckWithoutAxiomsOnlyClassifies) {
  EXPECT_EQ(run({"check", t(4)}).code, cli::kExitOk);
}

TEST(Cli, IdealClaims) {
  const CliResult z = run({"verify", t(4), "--claim", "z-ideal", "--set", "0,1,2"});
  EXPECT_EQ(z.code, cli::kExitViolated);
  EXPECT_NE(z.out.find("(x=3, y=1)"), std::string::npos) << z.out;
  const CliResult bo = run({"verify", t(2), "--claim", "bo-ideal", "--set", "0,1"});
  EXPECT_EQ(bo.code, cli::kExitViolated);
  EXPECT_NE(bo.out.find("condition (2) fails at (x=3, y=1)"), std::string::npos) << bo.out;
  EXPECT_EQ(run({"verify", t(3), "--claim", "bh-ideal", "--set", "0,1"}).code, cli::kExitOk);
}

TEST(Cli, JsonShapes) {
  const auto ideals = json_of({"ideals", t(3)});
  EXPECT_EQ(ideals["ideals"], nlohmann::json::parse("[[0],[0,1],[0,1,2],[0,1,2,3]]"));
  const auto congs = json_of({"congruences", t(3), "--complete"});
  EXPECT_EQ(congs["count"], 2);
  const auto approx = json_of({"approx", t(2), "--partition", "0,1|2|3|4", "--set", "0", "--pair"});
  EXPECT_EQ(approx["lower"], nlohmann::json::array());
  EXPECT_EQ(approx["upper"], nlohmann::json::parse("[0,1]"));
  const auto search = json_of({"search", "--order", "4", "--axioms", "bo"});
  EXPECT_EQ(search["count"], 4);
}

TEST(Cli, ApproxFromIdeal) {
  // {0} induces the identity on t2, so every set is definable.
  const auto j = json_of({"approx", t(2), "--ideal", "0", "--set", "1,3"});
  EXPECT_EQ(j["boundary"], nlohmann::json::array());
  const CliResult bad = run({"approx", t(4), "--ideal", "0,1,2", "--set", "1"});
  EXPECT_EQ(bad.code, cli::kExitViolated);
}

TEST(Cli, VerifyExhaustive) {
  EXPECT_EQ(run({"verify", t(1), "--prop", "3-2", "--exhaustive"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", t(3), "--prop", "3-1", "--exhaustive"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", t(3), "--prop", "2-1", "--exhaustive", "--items", "1,7,9"}).code,
            cli::kExitOk);
  const CliResult r = run({"verify", t(3), "--prop", "3-2", "--exhaustive"});
  EXPECT_EQ(r.code, cli::kExitViolated);
  EXPECT_NE(r.out.find("partition 0,1|2|3"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify", t(3), "--prop", "3-2", "--exhaustive", "--scope",
                 "complete-congruences"}).code,
            cli::kExitOk);
}

TEST(Cli, VerifyInstance) {
  const CliResult r = run({"verify", t(3), "--prop", "3-2", "--partition", "0,1,2,3", "--set", "0,1",
                     "--set2", "0,2"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  const CliResult bad = run({"verify", t(2), "--prop", "3-2", "--partition", "0,1|2|3|4", "--set", "0"});
  EXPECT_EQ(bad.code, cli::kExitInput);
}

TEST(Cli, SearchFind) {
  const CliResult r = run({"search", "--fixture", t(3), "--find", "3-2.2"});
  EXPECT_EQ(r.code, cli::kExitViolated);
  const CliResult clean = run({"search", "--fixture", t(1), "--fixture", t(2), "--find", "3-2.1"});
  EXPECT_EQ(clean.code, cli::kExitOk);
  EXPECT_NE(clean.out.find("no counterexample"), std::string::npos);
}

TEST(Cli, Morphism) {
  EXPECT_EQ(run({"morphism", t(1), "--map", "0:0;1:0;2:0;3:0", "--strong"}).code, cli::kExitOk);
  EXPECT_EQ(run({"morphism", t(1), "--map", "0:0;1:0,1;2:2;3:3"}).code, cli::kExitViolated);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", "/nonexistent.alg"}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", t(1), "--axioms", "C9"}).code, cli::kExitInput);
  EXPECT_EQ(run({"approx", t(1), "--set", "0"}).code, cli::kExitInput);
  EXPECT_EQ(run({"approx", t(1), "--partition", "0|1", "--set", "0"}).code, cli::kExitInput);
  EXPECT_EQ(run({"search", "--order", "6", "--axioms", "b"}).code, cli::kExitInput);
  EXPECT_EQ(run({"search", "--order", "5", "--axioms", "bh", "--time-budget-ms", "1"}).code,
            cli::kExitInput);
  EXPECT_EQ(run({"--format", "xml", "check", t(1)}).code, cli::kExitInput);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, ParseErrorMessageHasPosition) {
  const auto dir = std::filesystem::temp_directory_path() / "roughalg_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.alg";
  std::ofstream(bad) << "order 2\nzero 0\n0 1\n1 7\n";
  const CliResult r = run({"check", bad.string()});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("4"), std::string::npos) << r.err;
}

TEST(Cli, JsonIsIdenticalAcrossExecModes) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", t(3), "--prop", "2-1", "--exhaustive"},
      {"search", "--order", "3", "--axioms", "C1,C2", "--find", "2-1.11"},
      {"search", "--order", "4", "--axioms", "bo", "--list"},
  };
  for (const auto& cmd : commands) {
    auto serial = cmd;
    serial.insert(serial.begin(), {"--format", "json", "--exec", "serial"});
    auto parallel = cmd;
    parallel.insert(parallel.begin(), {"--format", "json", "--exec", "parallel"});
    EXPECT_EQ(run(serial).out, run(parallel).out);
    EXPECT_EQ(run(parallel).out, run(parallel).out);
  }
}
