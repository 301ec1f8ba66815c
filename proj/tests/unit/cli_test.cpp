#include "grass_cli/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace grass::cli {
namespace {

Result call(std::vector<std::string> args) { return run(args); }

TEST(Cli, Multiply) {
  Result r = call({"multiply", "--k", "2", "--n", "4", "s[1]", "s[1]"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "s[2] + s[1,1]\n");
  Result three = call({"multiply", "--k", "2", "--n", "4", "s[1]", "s[1]", "s[1]", "s[1]"});
  EXPECT_EQ(three.out, "2*s[2,2]\n");
}

TEST(Cli, ApplyOp) {
  EXPECT_EQ(call({"apply-op", "--k", "2", "--n", "4", "--op", "E", "s[1]"}).out, "4*s[]\n");
  for (const char* how : {"schubert", "exterior", "differential"}) {
    EXPECT_EQ(call({"apply-op", "--k", "2", "--n", "4", "--op", "F", "--realization", how, "s[1]"}).out,
              "s[2] + s[1,1]\n");
  }
  Result j = call({"apply-op", "--k", "2", "--n", "4", "--op", "H", "--format", "json", "s[1]"});
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["text"], "2*s[1]");
  EXPECT_EQ(parsed["result"]["coords"][0]["coeff"], "2");
}

TEST(Cli, NormalFormBettiInfoCogenerator) {
  EXPECT_EQ(call({"normal-form", "--k", "2", "--n", "4", "p1*q1"}).out, "-s[2] - s[1,1]\n");
  EXPECT_EQ(call({"betti", "--k", "2", "--n", "4"}).out, "1 1 2 1 1 (total 6)\n");
  auto betti = nlohmann::json::parse(call({"betti", "--k", "2", "--n", "5", "--format", "json"}).out);
  EXPECT_EQ(betti["total"], 10);
  auto info = nlohmann::json::parse(call({"info", "--k", "2", "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(info["dim"], 6);
  EXPECT_EQ(info["relations"][1], "p1*q1 + p2 + q2");
  EXPECT_EQ(call({"cogenerator", "--k", "1", "--n", "2"}).out, "-x1 + y1\n");
}

TEST(Cli, Verify) {
  Result r = call({"verify", "--k", "2", "--n", "4", "--suite", "all", "--format", "json"});
  EXPECT_EQ(r.exit_code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 12u);
  for (const auto& rep : j["reports"]) EXPECT_TRUE(rep["pass"].get<bool>()) << rep["check"];
  Result text = call({"verify", "--k", "1", "--n", "3", "--suite", "dynkin"});
  EXPECT_EQ(text.out, "PASS dynkin_grading Gr(1,3)\n");
}

TEST(Cli, DeterministicJson) {
  std::vector<std::string> args = {"verify", "--k", "2", "--n", "5", "--suite", "all", "--format", "json"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, Reconstruct) {
  Result r = call({"reconstruct", "--k", "2", "--n", "4", "--op", "E", "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["detected_order"], 2);
  Result capped = call({"reconstruct", "--k", "2", "--n", "4", "--op", "E", "--max-order", "1", "--format", "json"});
  EXPECT_EQ(capped.exit_code, kExitCheckFailed);
  EXPECT_FALSE(nlohmann::json::parse(capped.out)["pass"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).exit_code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"betti", "--k", "4", "--n", "4"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"betti", "--k", "0", "--n", "4"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"betti", "--k", "2", "--n", "13"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"betti", "--k", "2", "--n", "13", "--max-n", "13"}).exit_code, 0);
  EXPECT_EQ(call({"betti", "--n", "4"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"apply-op", "--k", "2", "--n", "4", "--op", "X", "s[1]"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"multiply", "--k", "2", "--n", "4", "s[3]"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"verify", "--k", "2", "--n", "4", "--suite", "nope"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"betti", "--k", "2", "--n", "4", "--format", "xml"}).exit_code, kExitUsage);
  EXPECT_EQ(call({"--help"}).exit_code, 0);
}

}  // namespace
}  // namespace grass::cli
