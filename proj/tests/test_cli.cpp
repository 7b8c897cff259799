#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gradelic/cli.hpp"
#include "gradelic/games.hpp"

using namespace gradelic;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return std::string(GRADELIC_SOURCE_DIR) + "/models/" + name; }

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gradelic_test_" + name)).string();
}

}  // namespace

TEST(Check, SonsTrees) {
  Invocation two = run({"check", model("two_p_sons.json"), "E>=2 X p"});
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(two.out, "true\n");
  Invocation one = run({"check", model("one_p_son.json"), "E>=2 X p"});
  EXPECT_EQ(one.code, 1);
  EXPECT_EQ(one.out, "false\n");
}

TEST(Check, StateAndExplain) {
  Invocation r = run({"check", model("one_p_son.json"), "p", "--state", "a", "--explain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("game positions:"), std::string::npos);
  EXPECT_EQ(run({"check", model("one_p_son.json"), "p", "--state", "zz"}).code, 2);
}

TEST(Check, InputErrors) {
  EXPECT_EQ(run({"check", model("missing.json"), "p"}).code, 2);
  EXPECT_EQ(run({"check", model("one_p_son.json"), "E>=2 X"}).code, 2);
  EXPECT_EQ(run({"check", model("one_p_son.json"), "X p"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Check, FormulaFileWithComments) {
  const std::string path = temp_file("formula.txt");
  std::ofstream(path) << "# two sons\nE>=2 X   # count them\n  p\n";
  EXPECT_EQ(run({"check", model("two_p_sons.json"), "-f", path}).code, 0);
  std::filesystem::remove(path);
}

TEST(Sat, Contradiction) {
  Invocation r = run({"sat", "p & !p", "--mode", "full"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, 6), "unsat\n");
}

TEST(Sat, WitnessFileRoundTrip) {
  const std::string path = temp_file("witness.json");
  Invocation r = run({"sat", "E>=2 X p", "--witness", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("witness verified: true"), std::string::npos);
  Lts w = load_lts_file(path);
  EXPECT_TRUE(model_check(w, w.initial(), parse("E>=2 X p")));
  std::filesystem::remove(path);
}

TEST(Sat, BoundedExhausted) {
  Invocation r = run({"sat", "E>=3 X p", "--mode", "bounded", "--max-states", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.substr(0, 15), "unsat-at-bound\n");
}

TEST(Sat, BudgetIsItsOwnExit) {
  setenv("GRADELIC_BUDGET", "500", 1);
  Invocation r = run({"sat", "A F p", "--mode", "full", "--degree", "2"});
  unsetenv("GRADELIC_BUDGET");
  EXPECT_EQ(r.code, 4);
}

TEST(Sat, BadFlags) {
  EXPECT_EQ(run({"sat", "p", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"sat", "p", "--degree", "0"}).code, 2);
}

TEST(Dump, AutomatonAndGame) {
  Invocation j = run({"dump", "E>=1 X p"});
  ASSERT_EQ(j.code, 0);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_TRUE(doc.contains("states"));
  Invocation d = run({"dump", "E>=1 X p", "--format", "dot"});
  EXPECT_EQ(d.out.rfind("digraph", 0), 0u);
  Invocation g = run({"dump", "E>=1 X p", "--what", "game", "--lts", model("one_p_son.json")});
  ASSERT_EQ(g.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(g.out).contains("positions"));
  EXPECT_EQ(run({"dump", "p", "--what", "game"}).code, 2);
}

TEST(Metrics, Counts) {
  Invocation r = run({"metrics", "E>=2 X p"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("length: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("degree: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("72 reachable"), std::string::npos);
}

TEST(Compare, OracleSuites) {
  for (const char* f : {"ex-count", "ctlstar-g1"}) {
    Invocation r = run({"compare", "--fragment", f, "--cases", "200", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << f;
    EXPECT_NE(r.out.find("cases: 200, mismatches: 0"), std::string::npos) << f;
  }
  EXPECT_EQ(run({"compare", "--fragment", "breakpoint", "--cases", "60"}).code, 0);
}

TEST(Compare, MutatedCheckerFails) {
  Invocation r = run({"compare", "--fragment", "ex-count", "--cases", "20", "--mutate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(run({"compare", "--fragment", "nonsense"}).code, 2);
}

TEST(Compare, SameSeedSameBytes) {
  Invocation a = run({"compare", "--fragment", "ctlstar-g1", "--cases", "40", "--seed", "3"});
  Invocation b = run({"compare", "--fragment", "ctlstar-g1", "--cases", "40", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
  Invocation c = run({"compare", "--fragment", "ctlstar-g1", "--cases", "40", "--seed", "4"});
  EXPECT_NE(a.out, c.out);
}
