#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/quantum.hpp"

using namespace skeinlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skeinlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kTrefoil = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3";

}  // namespace

TEST(Cli, BracketTrefoil) {
  auto r = run({"bracket", "--pd", kTrefoil});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-A^-9 + A^-1 + A^3 + A^7\n");
}

TEST(Cli, BracketEmpty) {
  auto r = run({"bracket", "--pd", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"bracket", "--pd", "X 1 2 3"}).code, 2);
  EXPECT_EQ(run({"bracket", "--pd", "hello"}).code, 2);
  EXPECT_EQ(run({"bracket", "--file", "/nonexistent/file.txt"}).code, 2);
  EXPECT_EQ(run({"cjones", "--pd", kTrefoil, "-n", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bracket", "--pd", kTrefoil, "--format", "xml"}).code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  auto r = run({"cjones", "--pd", kTrefoil, "-n", "4", "--max-width", "8"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("resource cap"), std::string::npos);
}

TEST(Cli, CJonesJsonRoundTrips) {
  auto r = run({"cjones", "--pd", "O", "-n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(polynomial_from_json(j["jones"]), delta(3));
  EXPECT_EQ(j["jones"]["minDeg"], -6);
  EXPECT_EQ(j["jones"]["coeffs"].size(), 13u);
  auto one = run({"cjones", "--pd", kTrefoil, "-n", "1"});
  EXPECT_EQ(one.out, run({"bracket", "--pd", kTrefoil}).out);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const char* sub : {"verify", "tail", "adequacy"}) {
    auto a = run({sub, "--format", "json", "--nmax", "2"});
    auto b = run({sub, "--format", "json", "--nmax", "2", "--jobs", "2"});
    EXPECT_EQ(a.code, 0) << sub << a.err;
    EXPECT_EQ(a.out, b.out) << sub;
  }
}

TEST(Cli, AdequacyTable) {
  auto r = run({"adequacy", "--pd", kTrefoil, "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["adequate"], true);
  EXPECT_EQ(j["alternating"], true);
  EXPECT_EQ(j["s_A"], 2);
  EXPECT_EQ(j["s_B"], 3);
  auto k = nlohmann::json::parse(run({"adequacy", "--pd", "X 1 1 2 2", "--format", "json"}).out);
  EXPECT_EQ(k["adequate"], false);
  auto e = nlohmann::json::parse(run({"adequacy", "--pd", "", "--format", "json"}).out);
  EXPECT_EQ(e["adequate"], true);
}

TEST(Cli, VerifyFixturesAndSkips) {
  auto r = run({"verify", "--nmax", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  auto s = run({"verify", "--pd", "X 4 2 5 1 / X 3 6 4 1 / X 5 2 6 3", "--format", "json"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.err.find("skipping"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(s.out)["skipped"].size(), 1u);
}

TEST(Cli, VerifyCsv) {
  auto r = run({"verify", "--pd", kTrefoil, "--nmax", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("link,n,", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, TailCommand) {
  auto r = run({"tail", "--pd", kTrefoil, "--nmax", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tail"]["certified_length"], 8);
  auto f = nlohmann::json::parse(run({"tail", "--pd", "X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8", "--format", "json"}).out);
  EXPECT_EQ(f["tail"]["coefficients"], f["head"]["coefficients"]);
  auto u = nlohmann::json::parse(run({"tail", "--pd", "O", "--nmax", "2", "--format", "json"}).out);
  EXPECT_EQ(u["tail"]["coefficients"], nlohmann::json::parse("[1,0,0,0,1,0,0,0,1]"));
  EXPECT_EQ(run({"tail", "--pd", "X 4 2 5 1 / X 3 6 4 1 / X 5 2 6 3"}).code, 2);
}

TEST(Cli, StatesCommand) {
  auto r = run({"states", "--pd", kTrefoil, "-n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["states"].size(), 8u);
  EXPECT_EQ(j["sum_equals_jones"], true);
  EXPECT_EQ(run({"states", "--pd", kTrefoil, "-n", "2", "--max-states", "4"}).code, 3);
}

TEST(Cli, FileInput) {
  const std::string path = ::testing::TempDir() + "skeinlab_inputs.txt";
  {
    std::ofstream f(path);
    f << "# two knots\ntrefoil: " << kTrefoil << "\nunknot: O\n";
  }
  auto r = run({"bracket", "--file", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "trefoil: -A^-9 + A^-1 + A^3 + A^7\nunknot: -A^-2 - A^2\n");
  EXPECT_EQ(run({"bracket", "--file", path, "--pd", "O"}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, MaxWidthFromEnvironment) {
  ::setenv("SKEINLAB_MAX_WIDTH", "8", 1);
  auto r = run({"cjones", "--pd", kTrefoil, "-n", "3"});
  ::unsetenv("SKEINLAB_MAX_WIDTH");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"cjones", "--pd", kTrefoil, "-n", "3"}).code, 0);
}
