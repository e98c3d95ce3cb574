#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pathmax/cli.hpp"

using namespace pathmax;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content = {}) {
  const auto p = std::filesystem::temp_directory_path() / ("pathmax_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("build-path on the star") {
  const Run r = run({"build-path", "--graph6", "Cs", "--weights", "ones"});
  REQUIRE(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["input_graph6"] == "Cs");
  CHECK(j["weights"] == "ones");
  CHECK(j["f_input"] == 9);
  CHECK(j["f_path"] == 10);
  CHECK(j["strict"] == true);
  CHECK(j["trace"][0]["op"] == "spanning_tree");
}

TEST_CASE("certificates validate on reload and tampering is caught") {
  const Run built = run({"build-path", "--graph6", "E~~w", "--weights", "random:5", "--class", "N_n"});
  REQUIRE(built.code == kExitPass);
  const auto good = temp_file("good.json", built.out);
  CHECK(run({"build-path", "--check", good.string()}).code == kExitPass);

  Json j = Json::parse(built.out);
  j["f_path"] = j["f_path"].get<std::int64_t>() + 1;
  const auto bad = temp_file("bad.json", j.dump());
  const Run checked = run({"build-path", "--check", bad.string(), "--format", "text"});
  CHECK(checked.code == kExitViolations);
  CHECK(checked.out.find("FAIL") != std::string::npos);

  const auto broken = temp_file("broken.json", "{\"path\": 1");
  CHECK(run({"build-path", "--check", broken.string()}).code == kExitUsage);
}

TEST_CASE("build-path inputs") {
  const auto edges = temp_file("edges.txt", "4 3\n1 2\n2 3\n2 4\n");
  const auto weights = temp_file("w.csv", "0,1,1,1\n1,0,1,1\n1,1,0,1\n1,1,1,0\n");
  const Run r = run({"build-path", "--edges", edges.string(), "--weights", weights.string(), "--format", "text"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("F(path) = 10") != std::string::npos);

  const auto real = temp_file("r.csv", "0,0.5,2.25\n0.5,0,1\n2.25,1,0\n");
  CHECK(run({"build-path", "--graph6", "Bw", "--weights", real.string()}).code == kExitPass);

  CHECK(run({"build-path", "--graph6", "Cs", "--edges", edges.string()}).code == kExitUsage);
  CHECK(run({"build-path", "--graph6", "C!"}).code == kExitUsage);
  CHECK(run({"build-path", "--graph6", "C_"}).code == kExitUsage);  // disconnected
  CHECK(run({"build-path", "--graph6", "Bg", "--weights", weights.string()}).code == kExitUsage);
  CHECK(run({"build-path", "--graph6", "Bg", "--weights", "random:x"}).code == kExitUsage);
}

TEST_CASE("usage errors exit with 2") {
  const Run zero = run({"verify-fa", "--n-max", "4", "--trials", "0"});
  CHECK(zero.code == kExitUsage);
  CHECK_FALSE(zero.err.empty());
  CHECK(zero.out.empty());

  const Run wrong = run({"verify-spectral", "--matrix", "d", "--direction", "min"});
  CHECK(wrong.code == kExitUsage);
  CHECK(wrong.err.find("maximizes") != std::string::npos);

  CHECK(run({"verify-spectral", "--matrix", "adj", "--direction", "max"}).code == kExitUsage);
  CHECK(run({"verify-spectral", "--matrix", "zz"}).code == kExitUsage);
  CHECK(run({"verify-spectral", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"no-such-command"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("verify-spectral passes at desk scale") {
  const Run r = run({"verify-spectral", "--matrix", "dq", "--direction", "max", "--n-min", "2", "--n-max", "6", "--omit-timing"});
  CHECK(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["universe_count"] == 27475);
  CHECK(j["config"]["matrix"] == "DQ");
  CHECK(j["version"] == kLibraryVersion);
}

TEST_CASE("graph6 file universe") {
  const auto list = temp_file("list.g6", "Ch\nCs\nC~\n");
  const Run r = run({"verify-spectral", "--input", list.string(), "--matrix", "dl", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("verify-spectral,extremal,Ch,") != std::string::npos);
}

TEST_CASE("violations exit with 1") {
  const Run r = run({"verify-spectral", "--matrix", "lap", "--n-min", "3", "--n-max", "3", "--format", "text"});
  CHECK(r.code == kExitViolations);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("reruns with --omit-timing are byte-identical across worker counts") {
  const std::vector<std::string> base{"verify-fa", "--n-max", "5", "--trials", "10", "--class", "nonneg", "--omit-timing", "--seed", "42"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto three = base;
  three.insert(three.end(), {"--jobs", "3"});
  const Run a = run(one);
  const Run b = run(three);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 42);
}

TEST_CASE("oracle, nath-paul and tightness subcommands") {
  const Run o = run({"oracle", "--n", "4", "--weights", "ones"});
  CHECK(o.code == kExitPass);
  const Json j = Json::parse(o.out);
  CHECK(j["task"] == "oracle");
  CHECK(j["extremal_value"] == 10.0);
  CHECK(j["extremal_graphs"].size() == 12);
  CHECK(run({"oracle", "--weights", "ones"}).code == kExitUsage);

  CHECK(run({"nath-paul", "--n-max", "6"}).code == kExitPass);

  const Run t = run({"tightness", "--n", "4", "--zero-row", "2", "--max-weight", "1", "--trials", "3"});
  CHECK(t.code == kExitPass);
  CHECK(Json::parse(t.out)["exhibits"].size() == 3);
}

TEST_CASE("reports can go to a file") {
  const auto target = std::filesystem::temp_directory_path() / "pathmax_test_report.json";
  std::filesystem::remove(target);
  const Run r = run({"nath-paul", "--n-max", "4", "--output", target.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  std::ifstream in(target);
  CHECK(Json::parse(in)["task"] == "nath-paul");
}
