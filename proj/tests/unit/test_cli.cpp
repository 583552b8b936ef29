#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "splab/cli.hpp"
#include "test_support.hpp"

using splab::testing::data_path;
using splab::testing::lines;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "splab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = splab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Insert) {
  Result r = run({"insert", "7", "3", "9", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, lines({"3 4 7'", "9"}));
  EXPECT_EQ(run({"insert", "7,3,9,4"}).out, r.out);
  Result empty = run({"insert"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(run({"insert", "x"}).code, 2);
}

TEST(Cli, RectifyMixed) {
  Result r = run({"rectify-mixed", data_path("skew_example.tab")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, lines({"1 2' 3'", "4"}));
  Result t = run({"rectify-mixed", data_path("staircase_7394.tab"), "--trace"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("pass=1 coll=6 rule=1 letter=3 from=(3,5) to=(3,4)\n"), std::string::npos);
  EXPECT_NE(t.out.find("\n3 4 7'\n9\n"), std::string::npos);
  Result s = run({"--trace", "rectify-mixed", "--states", data_path("staircase_7394.tab")});
  EXPECT_NE(s.out.find(lines({"3 4 * *", "* 7' 9"})), std::string::npos);
  EXPECT_EQ(run({"rectify-mixed", data_path("qtableau_u.tab")}).code, 2);
  EXPECT_EQ(run({"rectify-mixed", "/nonexistent.tab"}).code, 2);
}

TEST(Cli, RectifySwAndStandardize) {
  Result r = run({"rectify-sw", data_path("qtableau_u.tab")});
  EXPECT_EQ(r.code, 0);
  Result s = run({"standardize", data_path("qtableau_u.tab")});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, lines({". . 1 2 8 10 11", "3 4 5 9", "6 7"}));
}

TEST(Cli, Enumerate) {
  Result r = run({"enumerate", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, lines({"[[1,1]]", "[[1,2']]", "[[1,2]]", "[[2,2]]"}));
  Result q = run({"enumerate", "1", "--n", "2", "--mode", "qtableau"});
  EXPECT_EQ(q.out, lines({"[[1']]", "[[1]]", "[[2']]", "[[2]]"}));
  EXPECT_EQ(run({"enumerate", "2,2", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "2", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"enumerate", "2", "--n", "2", "--mode", "other"}).code, 2);
}

TEST(Cli, ExpandSkew) {
  Result r = run({"expand-skew", "2,1/1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\t1\n");
  Result c = run({"expand-skew", "4,2,1/2", "--check-sw"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "3,2\t2\tPASS\n4,1\t1\tPASS\n");
  EXPECT_EQ(run({"expand-skew", "3,1/3,1"}).out, "0\t1\n");
  EXPECT_EQ(run({"expand-skew", "2,1/3"}).code, 2);
}

TEST(Cli, PlacticSkew) {
  Result r = run({"plactic-skew", "2,1/1", "-n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, lines({"[[1,1]]\t1", "[[1,2']]\t1", "[[1,2]]\t1", "[[2,2]]\t1"}));
  Result h = run({"plactic-skew", "3/1", "-n", "2"});
  EXPECT_NE(h.out.find("[[1,1]]\t2\n"), std::string::npos);
}

TEST(Cli, Verify) {
  Result r = run({"verify", "mixed-jdt", "--n", "3", "--len", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tested 1092, failed 0"), std::string::npos);
  EXPECT_EQ(run({"verify", "bogus"}).code, 3);
  EXPECT_EQ(run({"--jobs", "2", "verify", "free-schur", "--max-size", "3"}).code, 0);
}

TEST(Cli, ParseFailuresAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--jobs", "0", "verify", "cho"}).code, 2);
}

TEST(Cli, JsonRoundTrips) {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "insert", "7", "3", "9", "4"},
      {"--json", "--trace", "rectify-mixed", data_path("skew_example.tab")},
      {"--json", "enumerate", "2,1", "--n", "2"},
      {"--json", "expand-skew", "5,3,1/2,1"},
      {"--json", "plactic-skew", "3,1/1", "-n", "2"},
      {"--json", "verify", "hook-oracle", "--len", "4"},
  };
  for (const auto& cmd : cmds) {
    Result r = run(cmd);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
  }
  auto j = nlohmann::json::parse(run({"--json", "insert", "2", "1"}).out);
  EXPECT_EQ(j["tableau"]["rows"], nlohmann::json::parse(R"([["1","2'"]])"));
}

TEST(Cli, ExitCodesAreTotal) {
  const std::vector<std::vector<std::string>> cmds = {
      {"insert", "1", "-2"}, {"rectify-sw"}, {"plactic-skew", "x", "-n", "1"}, {"verify"},
      {"expand-skew", "3/1", "--n", "-4"}, {"standardize", data_path("skew_example.tab")}};
  for (const auto& cmd : cmds) {
    int code = run(cmd).code;
    EXPECT_TRUE(code >= 0 && code <= 3);
  }
}
