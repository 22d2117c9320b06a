#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using Json = nlohmann::json;

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(ESAKIA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("esakia_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string fork() { return write("fork.json", R"({"points": ["b", "x", "y"], "leq": [[0, 1], [0, 2]]})"); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, LadderDot) {
  const auto r = cli("ladder --n 1 --depth 2 --no-bottom --dot");
  ASSERT_EQ(r.status, 0);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = r.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 6u);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST_F(CliTest, LadderJson) {
  const auto r = cli("ladder --n 0 --depth 3 --no-bottom");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["points"].size(), 6u);
  EXPECT_FALSE(j["leq"].empty());
  EXPECT_EQ(j["levels"].size(), 6u);
}

TEST_F(CliTest, LadderInvalid) {
  EXPECT_EQ(cli("ladder --n -1 --depth 2").status, 1);
  EXPECT_EQ(cli("ladder --n 1").status, 1);
  EXPECT_EQ(cli("ladder --n 5 --depth 9").status, 2);
}

TEST_F(CliTest, GenerateFork) {
  const auto r = cli("generate " + fork() + " --gen {x}");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  const auto& result = j["result"];
  EXPECT_EQ(result["size"], 5);
  bool found = false;
  for (const auto& e : result["elements"])
    if (e["label"] == "{y}") {
      found = true;
      EXPECT_EQ(e["rank"], 1);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["seed"], 1);
}

TEST_F(CliTest, GenerateEmptyAndErrors) {
  const auto r = cli("generate " + fork());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["size"], 2);
  EXPECT_EQ(cli("generate " + write("bad.json", "{oops")).status, 1);
  EXPECT_EQ(cli("generate " + fork() + " --gen {b}").status, 1);
  EXPECT_EQ(cli("generate " + fork() + " --gen {q}").status, 1);
  EXPECT_EQ(cli("generate " + (dir_ / "missing.json").string()).status, 1);
  EXPECT_EQ(cli("generate " + write("anti.json", R"({"points": ["a", "b", "c", "d"]})") +
                " --gen {a} --gen {b} --budget-upsets 3")
                .status,
            2);
}

TEST_F(CliTest, VerifyExitCodes) {
  EXPECT_EQ(cli("verify duality --corpus exhaustive5").status, 0);
  EXPECT_EQ(cli("verify non-colourable --n 1 --depth 4").status, 0);
  EXPECT_EQ(cli("verify bogus").status, 1);
  // Repeating a depth breaks the strictly-increasing size claim.
  EXPECT_EQ(cli("verify strictness --depths 4,4").status, 3);
  EXPECT_EQ(cli("verify non-colourable --n 2 --depth 3 --budget-tuples 10").status, 2);
}

TEST_F(CliTest, FailureCarriesCounterexample) {
  const auto r = cli("verify strictness --depths 5,4");
  ASSERT_EQ(r.status, 3);
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j["result"]["passed"].get<bool>());
  ASSERT_EQ(j["result"]["counterexample"].size(), 2u);
  EXPECT_EQ(j["result"]["counterexample"][0]["depth"], 5);
}

TEST_F(CliTest, OtherCommands) {
  const auto f = fork();
  EXPECT_EQ(Json::parse(cli("upsets " + f).out)["result"]["count"], 5);
  EXPECT_EQ(Json::parse(cli("algebra " + f).out)["result"]["size"], 5);
  const auto types = Json::parse(cli("types " + f + " --colour {x}").out)["result"];
  EXPECT_EQ(types["blocks"].size(), 3u);
  EXPECT_EQ(types["stabilized_at"], 1);
  EXPECT_EQ(Json::parse(cli("types " + f + " --colour {x} --stage 0").out)["result"]["blocks"].size(), 2u);
  EXPECT_EQ(Json::parse(cli("colour-search " + f).out)["result"]["min_colours"], 1);
  EXPECT_EQ(Json::parse(cli("colour-search " + f + " --k 0").out)["result"]["found"], false);
  const auto product = Json::parse(cli("product " + f + " " + f + " --k 1").out)["result"];
  EXPECT_EQ(product["sizes"][2], 25);
  const auto strict = cli("strictness --n 1 --depths 4,5 --format text");
  ASSERT_EQ(strict.status, 0);
  EXPECT_NE(strict.out.find("depth"), std::string::npos);
}

TEST_F(CliTest, OutFlagAndDeterminism) {
  const auto path = (dir_ / "report.json").string();
  ASSERT_EQ(cli("verify collapse --samples 20 --seed 7 --out " + path).status, 0);
  std::ifstream in(path);
  const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(Json::parse(first)["seed"], 7);
  EXPECT_EQ(cli("verify collapse --samples 20 --seed 7").out, first);
  EXPECT_NE(cli("verify collapse --samples 20 --seed 8").out, first);
}
