// Runs the command-line tool as a subprocess.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(LGP_TEST_DATA) + "/" + name; }

Run run(const std::string& args) {
  const std::string err_path = ::testing::TempDir() + "lgp_cli_stderr.txt";
  const std::string cmd = std::string(LGP_CLI_PATH) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ShaExactTriangle) {
  const auto r = run("sha " + data("triangle.json") + " --exact");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["classCount"], 2);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["verdict"], "counterexample");
}

TEST(Cli, ShaLowerBoundNonmono) {
  const auto r = run("sha " + data("nonmono.json") + " --lower-bound");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json_of(r)["classCount"], 2);
  EXPECT_EQ(json_of(r)["exact"], false);
}

TEST(Cli, ExactRefusedOutsideHypothesis) {
  const auto r = run("sha " + data("nonmono.json") + " --exact");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("HypothesisViolated"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InputErrorsExitTwo) {
  const auto parse = run("sha " + data("syntax_error.json"));
  EXPECT_EQ(parse.exit_code, 2);
  EXPECT_NE(parse.err.find("ParseError"), std::string::npos) << parse.err;
  EXPECT_NE(parse.err.find("line"), std::string::npos) << parse.err;
  EXPECT_EQ(run("graph-check " + data("not_bipartite.json")).exit_code, 2);
  EXPECT_EQ(run("sha /nonexistent/model.json").exit_code, 2);
  EXPECT_EQ(run("examples square").exit_code, 2);
  EXPECT_EQ(run("no-such-command").exit_code, 2);
  EXPECT_EQ(run("--max-states 0 sha " + data("triangle.json")).exit_code, 2);
}

TEST(Cli, StateBoundExitsOne) {
  const auto r = run("--max-states 10 sha " + data("triangle.json") + " --lower-bound");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("StateBoundExceeded"), std::string::npos) << r.err;
}

TEST(Cli, GraphCheck) {
  const auto r = run("graph-check " + data("monotonic.json"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["isMonotonicTree"], true);
  EXPECT_EQ(j["monotonicRoot"], 0);
  EXPECT_EQ(json_of(run("graph-check " + data("triangle.json")))["cycleRank"], 1);
}

TEST(Cli, Dk) {
  auto j = json_of(run("dk --a -1 --b 2"));
  EXPECT_EQ(j["d"], 1);
  EXPECT_TRUE(j["torusGroup"].empty());
  j = json_of(run("dk --kappa 17 --a -1 --b 2"));
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["torusGroup"], nlohmann::json({2}));
  const auto bad = run("dk --a 2 --b 8");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("DegenerateExtension"), std::string::npos);
}

TEST(Cli, HilbertAndTate) {
  const auto h = json_of(run("hilbert --a -1 --b -1"));
  EXPECT_EQ(h["split"], false);
  EXPECT_EQ(h["symbols"]["2"], -1);
  EXPECT_EQ(json_of(run("hilbert --a 3 --b 5 --place 3"))["symbol"], -1);
  const auto t = json_of(run("tate " + data("z4_negation.json")));
  EXPECT_EQ(t["invariantFactors"], nlohmann::json({2}));
}

TEST(Cli, Examples) {
  const auto tri = json_of(run("examples triangle --group s3"));
  EXPECT_EQ(tri["sha"]["classCount"], 3);
  const auto nm = json_of(run("examples nonmono"));
  EXPECT_EQ(nm["sha"]["classCount"], 2);
  EXPECT_EQ(nm["sha"]["verdict"], "counterexample");
}

TEST(Cli, TableFormat) {
  const auto r = run("--format table sha " + data("triangle.json"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("classCount: 2"), std::string::npos) << r.out;
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string& args : std::vector<std::string>{"sha " + data("triangle.json"), "examples nonmono", "hilbert --a 6 --b -15",
                                 "tate " + data("v4_regular.json")}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.exit_code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, SelftestRejectsCorruptCorpus) {
  const auto r = run("selftest --corpus " + data("corrupt_groups.json"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE((r.out + r.err).find("NotAssociative"), std::string::npos) << r.out << r.err;
}
