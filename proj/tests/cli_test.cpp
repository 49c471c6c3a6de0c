#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "timcoop/serialization.hpp"

namespace timcoop {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TIMCOOP_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, TopologyGenerators) {
  const Result r = run({"topology", "wyner", "--k", "4"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(topology_from_json(Json::parse(r.out)), wyner(4));
  EXPECT_EQ(topology_from_json(Json::parse(run({"topology", "figure4"}).out)), figure4_example());
  EXPECT_EQ(topology_from_json(Json::parse(run({"topology", "cyclic", "--k", "5"}).out)), cyclic_wyner(5));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"topology", "wyner", "--k", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"topology", "hexagon", "--k", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"repro", "nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze", "/nonexistent/file.json"}).code, cli::kExitUsage);
  const Result bad = run({"analyze", "-"}, R"({"k": 3, "links": [[1, 9]]})");
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("links"), std::string::npos);
}

TEST(Cli, AnalyzeFromStdin) {
  const std::string topo = to_json(wyner(6)).dump();
  const Result r = run({"analyze", "-", "--json"}, topo);
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(rational_from_json(j["lower"]["value"]), Rational(4));
  EXPECT_EQ(rational_from_json(j["upper"]["value"]), Rational(4));
  EXPECT_EQ(j["upper"]["evidence"]["a"], Json::parse("[2, 5]"));
  EXPECT_TRUE(j["tight"].get<bool>());
  EXPECT_EQ(rational_from_json(j["per_user"]), Rational(2, 3));
  EXPECT_EQ(j["version"], cli::version());

  const Result text = run({"analyze", "-"}, topo);
  EXPECT_NE(text.out.find("tight:        yes"), std::string::npos);
}

TEST(Cli, BoundWithSet) {
  const std::string path = write_temp("timcoop_cli_w6.json", to_json(wyner(6)).dump());
  EXPECT_EQ(run({"bound", path, "--set", "2,5"}).code, cli::kExitOk);
  const Result bad = run({"bound", path, "--set", "2,3"});
  EXPECT_EQ(bad.code, cli::kExitClaimFailure);
  EXPECT_NE(bad.out.find("transmitter 2"), std::string::npos);
  EXPECT_EQ(run({"bound", path, "--set", "9"}).code, cli::kExitUsage);
}

TEST(Cli, AchieveWritesVerifiableScheme) {
  const std::string topo = write_temp("timcoop_cli_w9.json", to_json(wyner(9)).dump());
  const auto scheme = (std::filesystem::temp_directory_path() / "timcoop_cli_w9_scheme.json").string();
  const Result r = run({"achieve", topo, "--scheme-out", scheme, "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(rational_from_json(Json::parse(r.out)["value"]), Rational(6));
  const Result v = run({"verify-scheme", topo, scheme, "--trials", "10", "--json"});
  EXPECT_EQ(v.code, cli::kExitOk) << v.err;
  EXPECT_EQ(rational_from_json(Json::parse(v.out)["outcome"]["dof"]), Rational(6));
}

TEST(Cli, VerifyFigure4CoherenceContrast) {
  const Result ok = run({"verify-scheme", data("figure4_topology.json"), data("figure4_scheme.json"), "--json"});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  const Json j = Json::parse(ok.out);
  EXPECT_EQ(rational_from_json(j["outcome"]["dof"]), Rational(3, 2));
  EXPECT_EQ(j["all_decodable_trials"], 50);

  const Result flat = run({"verify-scheme", data("figure4_unit_coherence.json"), data("figure4_scheme.json"), "--json"});
  EXPECT_EQ(flat.code, cli::kExitClaimFailure);
  const Json f = Json::parse(flat.out);
  EXPECT_EQ(rational_from_json(f["outcome"]["dof"]), Rational(1));
  EXPECT_EQ(f["outcome"]["receivers"][2], "undecodable");
}

TEST(Cli, ReproCases) {
  const Result t1 = run({"repro", "theorem1", "--k-list", "3,6", "--json"});
  ASSERT_EQ(t1.code, cli::kExitOk) << t1.err << t1.out;
  for (const Json& row : Json::parse(t1.out)["rows"]) EXPECT_TRUE(row["pass"].get<bool>()) << row.dump();
  EXPECT_EQ(run({"repro", "lemma2", "--k-list", "6", "--trials", "5"}).code, cli::kExitOk);
  EXPECT_EQ(run({"repro", "fullyconnected", "--k-list", "2,3,4"}).code, cli::kExitOk);
  EXPECT_EQ(run({"repro", "coherence", "--trials", "10"}).code, cli::kExitOk);
}

TEST(Cli, Version) {
  const Result r = run({"--version"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find(cli::version()), std::string::npos);
}

}  // namespace
}  // namespace timcoop
