#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace altpaths;
using json = nlohmann::json;

namespace {

const std::string kCli = ALTPATHS_CLI_PATH;

std::string write_instance(const std::string& dir, const Instance& inst, const std::string& name) {
  const std::string path = dir + "/" + name;
  save_instance(inst, path);
  return path;
}

}  // namespace

TEST(Cli, GeneratePresets) {
  const std::string dir = testutil::temp_dir("cli-gen");
  auto r = testutil::run(kCli + " generate --preset config1 --seed 3 --out " + dir);
  ASSERT_EQ(r.exit_code, 0);
  const json manifest = json::parse(r.out);
  ASSERT_EQ(manifest["networks"].size(), 2u);
  EXPECT_EQ(manifest["networks"][0]["nodes"], 20);
  EXPECT_EQ(manifest["networks"][0]["density"], 0.4);
  EXPECT_EQ(manifest["networks"][1]["density"], 0.6);
  EXPECT_EQ(manifest["networks"][0]["k"], json({3, 6}));
  const Network net = load_network(dir + "/" + manifest["networks"][0]["file"].get<std::string>());
  EXPECT_EQ(net.node_count(), 20);
  EXPECT_EQ(net.arc_count(), 152);
  EXPECT_EQ(json::parse(testutil::slurp(dir + "/manifest.json")), manifest);

  r = testutil::run(kCli + " generate --preset config2 --out " + dir + "/c2");
  ASSERT_EQ(r.exit_code, 0);
  const json m2 = json::parse(r.out);
  ASSERT_EQ(m2["networks"].size(), 1u);
  EXPECT_EQ(m2["networks"][0]["nodes"], 40);
  EXPECT_EQ(m2["networks"][0]["density"], 0.1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, GenerateIsDeterministic) {
  const std::string a = testutil::temp_dir("cli-a");
  const std::string b = testutil::temp_dir("cli-b");
  ASSERT_EQ(testutil::run(kCli + " generate --nodes 5 --density 0.6 --seed 1 --out " + a).exit_code, 0);
  ASSERT_EQ(testutil::run(kCli + " generate --nodes 5 --density 0.6 --seed 1 --out " + b).exit_code, 0);
  EXPECT_EQ(testutil::slurp(a + "/n5-d60-s1.json"), testutil::slurp(b + "/n5-d60-s1.json"));
  EXPECT_EQ(testutil::slurp(a + "/manifest.json"), testutil::slurp(b + "/manifest.json"));
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST(Cli, BadFlags) {
  EXPECT_EQ(testutil::run(kCli + " generate --bogus 1").exit_code, 1);
  EXPECT_EQ(testutil::run(kCli + " generate --density 0.01 --out /tmp").exit_code, 1);
  EXPECT_EQ(testutil::run(kCli + " solve --instance x.json --method simplex").exit_code, 1);
  EXPECT_EQ(testutil::run(kCli + " solve").exit_code, 1);
  EXPECT_EQ(testutil::run(kCli + " solve --instance /nonexistent.json").exit_code, 1);
  EXPECT_EQ(testutil::run(kCli).exit_code, 1);
}

TEST(Cli, SolveRapcpTiny) {
  const std::string dir = testutil::temp_dir("cli-solve");
  const std::string path = write_instance(dir, testutil::seven_node_instance(), "fig.json");
  auto r = testutil::run(kCli + " solve --instance " + path + " --method rapcp");
  ASSERT_EQ(r.exit_code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["obj_a"], 3);
  EXPECT_EQ(doc["obj_b"], 2);
  EXPECT_EQ(doc["status"], "optimal");
  EXPECT_EQ(doc["paths"].size(), 3u);

  r = testutil::run(kCli + " solve --instance " + path + " --method benders --out " + dir +
                    "/sol.json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  doc = json::parse(testutil::slurp(dir + "/sol.json"));
  EXPECT_EQ(doc["z"], 5);
  EXPECT_EQ(doc["cost"], 18);
  EXPECT_FALSE(doc.contains("obj_a"));
  for (const char* key : {"paths", "z", "cost", "status", "stats"}) EXPECT_TRUE(doc.contains(key));

  r = testutil::run(kCli + " solve --instance " + path + " --method benders --k 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["cost"], 3);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SolveExitCodes) {
  const std::string dir = testutil::temp_dir("cli-codes");
  Network cut({0, 1, 2}, {{0, 1, 2, 1, 1}});
  const std::string none = write_instance(dir, Instance{cut, 0, 2, 2, std::nullopt}, "none.json");
  auto r = testutil::run(kCli + " solve --instance " + none + " --method benders");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(json::parse(r.out)["status"], "infeasible");

  GeneratorConfig cfg;
  cfg.node_count = 40;
  cfg.density = 0.3;
  cfg.seed = 2;
  const auto cases = enumerate_instances(generate_random(cfg), 6);
  const std::string big = write_instance(dir, cases[0].instance, "big.json");
  const std::string err = dir + "/err.txt";
  r = testutil::run(kCli + " solve --instance " + big + " --method benders --time-limit 1", err);
  EXPECT_EQ(r.exit_code, 3);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "time-limit-incumbent");
  EXPECT_EQ(doc["paths"].size(), 6u);

  r = testutil::run(kCli + " solve --instance " + big + " --method oracle", err);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(json::parse(r.out)["status"], "refused");
  EXPECT_NE(testutil::slurp(err).find("refused"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BenchWritesCsvsAndResumes) {
  const std::string dir = testutil::temp_dir("cli-bench");
  ASSERT_EQ(testutil::run(kCli + " generate --nodes 6 --density 0.5 --seed 4 --k 2 --out " + dir +
                          "/set")
                .exit_code,
            0);
  const std::string bench = kCli + " bench --dir " + dir + "/set --methods benders,rapcp " +
                            "--time-limit 5 --max-instances 12 --out " + dir + "/out";
  const std::string err = dir + "/err.txt";
  ASSERT_EQ(testutil::run(bench, err).exit_code, 0);
  const std::string results = testutil::slurp(dir + "/out/results.csv");
  EXPECT_EQ(results.substr(0, results.find('\n')), kResultsHeader);
  EXPECT_EQ(std::count(results.begin(), results.end(), '\n'), 1 + 24);
  const std::string gap = testutil::slurp(dir + "/out/gap.csv");
  EXPECT_NE(gap.find("\nCost,"), std::string::npos);
  EXPECT_NE(gap.find("\nMin Surviving Paths,"), std::string::npos);
  EXPECT_NE(gap.find("\nMin Max-Flow,"), std::string::npos);
  EXPECT_NE(gap.find("\nPaths disjointness,"), std::string::npos);
  const std::string profile = testutil::slurp(dir + "/out/profile.csv");
  EXPECT_EQ(profile.substr(0, profile.find('\n')), "t_s,frac_benders,frac_rapcp");

  ASSERT_EQ(testutil::run(bench, err).exit_code, 0);
  EXPECT_EQ(testutil::slurp(dir + "/out/results.csv"), results);
  EXPECT_NE(testutil::slurp(err).find("resuming"), std::string::npos);

  ASSERT_EQ(testutil::run(kCli + " bench --dir " + dir + "/set --methods rapcp --out " + dir +
                              "/single --max-instances 4",
                          err)
                .exit_code,
            0);
  EXPECT_FALSE(std::filesystem::exists(dir + "/single/gap.csv"));
  EXPECT_NE(testutil::slurp(err).find("gap table skipped"), std::string::npos);
  std::filesystem::remove_all(dir);
}
