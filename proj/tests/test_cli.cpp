#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "skewdual/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  std::vector<json> records() const {
    std::vector<json> v;
    std::istringstream is(out);
    std::string ln;
    while (std::getline(is, ln)) v.push_back(json::parse(ln));
    return v;
  }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = skewdual::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Count) {
  auto r = run({"count", "--q", "3", "--r", "6", "--k", "1", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "80\n");
  auto j = run({"count", "--q", "3", "--r", "18"}).records();
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["schema"], "skewdual");
  EXPECT_EQ(j[0]["version"], 1);
  EXPECT_EQ(j[1]["count"], "469740602936729600");
}

TEST(Cli, Exists) {
  auto r = run({"exists", "--q", "5", "--r", "6", "--k", "1", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "false\n");
  auto j = run({"exists", "--q", "3", "--r", "4", "--modulus=1,0,1"}).records();
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[1]["exists"].get<bool>());
  EXPECT_EQ(run({"exists", "--q", "3", "--r", "6", "--k", "3"}).code, 2);
}

TEST(Cli, EnumerateMatchesCountAndOracle) {
  auto e = run({"enumerate", "--q", "3", "--r", "2", "--k", "1"}).records();
  ASSERT_EQ(e.size(), 3u);
  auto o = run({"oracle", "--q", "3", "--r", "2", "--k", "1"}).records();
  EXPECT_EQ(o[1]["selfdual"], 2);
  for (std::size_t i = 1; i < e.size(); ++i) {
    EXPECT_TRUE(e[i]["selfdual"].get<bool>());
    EXPECT_EQ(e[i]["dim"], 1);
  }
  for (const auto& args : std::vector<std::vector<std::string>>{{"--q", "3", "--r", "6", "--k", "1"},
                                                                {"--q", "7", "--r", "2", "--k", "3"},
                                                                {"--q", "9", "--r", "2", "--modulus=1,0,1"},
                                                                {"--q", "3", "--r", "4", "--k", "5"}}) {
    std::vector<std::string> a{"enumerate", "--format", "text"}, c{"count", "--format", "text"};
    a.insert(a.end(), args.begin(), args.end());
    c.insert(c.end(), args.begin(), args.end());
    auto lines = run(a).out;
    const auto n = std::count(lines.begin(), lines.end(), '\n');
    EXPECT_EQ(std::to_string(n) + "\n", run(c).out);
  }
  auto lim = run({"enumerate", "--q", "3", "--r", "6", "--limit", "5"}).records();
  EXPECT_EQ(lim.size(), 6u);
}

TEST(Cli, RandomIsDeterministic) {
  std::vector<std::string> a{"random", "--q", "3", "--r", "6", "--seed", "11", "--matrix"};
  auto r1 = run(a), r2 = run(a);
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  auto rec = r1.records().at(1);
  EXPECT_TRUE(rec["selfdual"].get<bool>());
  EXPECT_EQ(rec["generator_matrix"].size(), 3u);
  EXPECT_EQ(run({"random", "--q", "5", "--r", "6"}).code, 3);
}

TEST(Cli, VerifyAndDual) {
  auto r = run({"random", "--q", "3", "--r", "6", "--seed", "2"});
  auto v = run({"verify", "--generator", r.out, "--format", "text"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("selfdual true"), std::string::npos);
  auto gen = r.records().at(1)["generator"];
  auto d = run({"dual", "--q", "3", "--r", "6", "--generator", gen.dump()}).records();
  EXPECT_EQ(d.at(1)["generator"], gen);
  // X - 1 over GF(9), Y - 1: not selfdual
  auto w = run({"verify", "--q", "3", "--r", "2", "--generator", "[[2,0],[1,0]]"}).records();
  EXPECT_FALSE(w.at(1)["selfdual"].get<bool>());
  EXPECT_EQ(w.at(1)["dim"], 1);
  EXPECT_EQ(run({"verify", "--q", "3", "--r", "2", "--generator", "[[7,0]]"}).code, 2);
  EXPECT_EQ(run({"verify", "--q", "3", "--r", "2", "--generator", "not json"}).code, 2);
}

TEST(Cli, Inseparable) {
  auto j = run({"inseparable-enum", "--q", "3", "--r", "2", "--k", "3"}).records();
  ASSERT_EQ(j.size(), 10u);
  EXPECT_EQ(j.back()["summary"]["raw"], 16);
  EXPECT_EQ(j.back()["summary"]["yielded"], 8);
  auto raw = run({"inseparable-enum", "--q", "3", "--r", "2", "--k", "3", "--dedup", "off"}).records();
  EXPECT_EQ(raw.size(), 18u);
  EXPECT_EQ(run({"inseparable-enum", "--q", "3", "--r", "2", "--k", "4"}).code, 2);
}

TEST(Cli, InvalidParameters) {
  EXPECT_EQ(run({"count", "--q", "4", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--q", "2", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--q", "3", "--r", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--q", "5", "--r", "2", "--modulus=-2,1"}).code, 2);
  EXPECT_EQ(run({"oracle", "--q", "3", "--r", "6", "--budget", "10"}).code, 2);
  EXPECT_EQ(run({"count", "--help"}).code, 0);
}

TEST(Cli, DecomposeAndOutput) {
  auto j = run({"decompose", "--q", "3", "--r", "2", "--k", "5"}).records();
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["components"].size(), 2u);
  EXPECT_EQ(j[1]["components"][0]["symmetry_class"], "euclidean");
  const auto path = std::filesystem::temp_directory_path() / "skewdual_cli_test.ndjson";
  auto r = run({"enumerate", "--q", "3", "--r", "2", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string all((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(std::count(all.begin(), all.end(), '\n'), 3);
  std::filesystem::remove(path);
}
