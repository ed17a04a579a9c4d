#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = odsk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("odsk_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string cube_tsv() {
  std::string text;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (a != b && (a & b) == a && __builtin_popcount(b ^ a) == 1)
        text += "s" + std::to_string(a) + "\ts" + std::to_string(b) + "\n";
  return temp_file("cube.tsv", text);
}

}  // namespace

TEST(Cli, MediateAirlines) {
  const auto r = run({"omspace", "mediate", oracle::data_path("airlines.cxt"), oracle::data_path("airlines_dist.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Scandinavian\tAustrian A.\t1563\n"), std::string::npos) << r.out;
}

TEST(Cli, EmptyContextHasOneConcept) {
  const auto r = run({"concepts", temp_file("empty.cxt", "B\n\n0\n0\n\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("concepts: 1\n"), std::string::npos);
}

TEST(Cli, RembrandtJson) {
  const auto r = run({"--json", "concepts", oracle::data_path("rembrandt.cxt")});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["concepts"], 9);
  EXPECT_EQ(doc["list"].size(), 9u);
}

TEST(Cli, ImplicationsRembrandt) {
  const auto r = run({"--json", "implications", oracle::data_path("rembrandt.cxt")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["implications"], 6);
  EXPECT_EQ(nlohmann::json::parse(r.out)["base"].size(), 6u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"factors", oracle::data_path("socialnet.cxt"), "-k", "0"}).code, 1);
  EXPECT_EQ(run({"draw", oracle::data_path("rembrandt.cxt"), "--algo", "spring"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"concepts", "/nonexistent/file.cxt"}).code, 2);
  EXPECT_EQ(run({"concepts", temp_file("bad.cxt", "B\n\n1\n1\n\ng\nm\nQ\n")}).code, 2);
  EXPECT_EQ(run({"complete", temp_file("cycle.tsv", "a\tb\nb\ta\n")}).code, 2);
  const auto r = run({"omspace", "mediate", oracle::data_path("airlines.cxt"), temp_file("bad.csv", ",a\na,x\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, BudgetExceeded) {
  const auto r = run({"dimension", cube_tsv(), "--max-k", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"dimension", cube_tsv()}).code, 0);
}

TEST(Cli, DimensionCube) {
  const auto r = run({"--json", "dimension", cube_tsv()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 3);
}

TEST(Cli, FactorsSocialNetworks) {
  const auto r = run({"--json", "factors", oracle::data_path("socialnet.cxt"), "-k", "2"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["uncovered"], 5);
}

TEST(Cli, DrawIsDeterministic) {
  const std::vector<std::string> args{"draw", oracle::data_path("rembrandt.cxt"), "--seed", "3"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("<svg"), std::string::npos);
  const auto svg = std::filesystem::temp_directory_path() / "odsk_test_draw.dot";
  EXPECT_EQ(run({"draw", oracle::data_path("bundesliga.tsv"), "--algo", "layered", "-o", svg.string()}).code, 0);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("digraph order", 0), 0u);
}
