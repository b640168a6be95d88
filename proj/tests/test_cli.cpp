#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sigmabrauer/brauer.hpp"
#include "sigmabrauer/cli.hpp"

using namespace sb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sigmabrauer_test_" + name);
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(run({"homdim", "--sigma", "2", "--n", "4", "--m", "0"}).out == R"({"dim":3})"
                                                                        "\n");
  CHECK(run({"ext", "--sigma", "2", "--i", "0", "--lambda", "2,1", "--mu", "2,1"}).out == "{\"dim\":1}\n");
  CHECK(run({"shift", "--lambda", "2", "--n", "1"}).out == "{\"∅\":1,\"1\":1,\"2\":1}\n");
  CHECK(run({"mult", "--sigma", "2", "--lambda", "2,2", "--mu", "2"}).out == "{\"multiplicity\":1}\n");
  CHECK(run({"ext", "--sigma", "2", "--i", "2", "--lambda", "0", "--mu", "3,1"}).out == "{\"dim\":1}\n");
}

TEST_CASE("traceless and stabilizer subcommands") {
  const auto t = run({"traceless", "--sigma", "2", "--rank", "5", "--n", "2", "--lambda", "2", "--seed", "1"});
  CHECK(t.code == 0);
  CHECK(t.out == "{\"rank\":5,\"n\":2,\"dim\":24,\"lambda\":\"2\",\"realization_dim\":14}\n");
  const auto plain = nlohmann::json::parse(run({"traceless", "--sigma", "2", "--rank", "3", "--n", "1", "--seed", "4"}).out);
  CHECK(plain["dim"] == 3);
  CHECK_FALSE(plain.contains("realization_dim"));

  const auto s = run({"stab", "check", "--sigma", "3", "--rank", "3", "--seed", "1", "--samples", "20"});
  CHECK(s.code == 0);
  const auto doc = nlohmann::json::parse(s.out);
  REQUIRE(doc["reports"].size() == 3);
  for (const auto& r : doc["reports"]) {
    CHECK(r["passes"] == r["samples"]);
    CHECK(r["failures"].empty());
  }
}

TEST_CASE("oracle sweep") {
  const auto r = run({"oracle", "step1", "--sigma", "2|1", "--max", "4"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_equal"] == true);
  CHECK(doc["cases"].size() == 15);
  for (const auto& c : doc["cases"]) CHECK(c["diagrams"] == c["weights"]);
}

TEST_CASE("compose reads a JSON job") {
  const auto path = temp_file("compose.json");
  {
    std::ofstream f(path);
    f << R"({"sigma":"1,1",)"
      << R"("f":{"source_size":2,"target_size":2,"terms":[{"coef":"1","matching":[[1,2],[2,1]],"blocks":[]}]},)"
      << R"("g":{"source_size":2,"target_size":0,"terms":[{"coef":"3/2","matching":[],"blocks":[{"support":[1,2],"type":0,"coords":["1"]}]}]}})";
  }
  const auto r = run({"compose", "--in", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"source_size":2,"target_size":0,"terms":[{"coef":"-3/2","matching":[],"blocks":[{"support":[1,2],"type":0,"coords":["1"]}]}]})"
        "\n");
  {
    std::ofstream f(path);
    f << R"({"sigma":"2","f":{"source_size":2,"target_size":2,"terms":[]},"g":{"source_size":3,"target_size":0,"terms":[]}})";
  }
  CHECK(run({"compose", "--in", path.string()}).code == 1);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(run({"compose", "--in", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"compose", "--in", temp_file("missing.json").string()}).code == 2);
}

TEST_CASE("output file") {
  const auto path = temp_file("out.json");
  const auto r = run({"homdim", "--sigma", "2", "--n", "6", "--m", "0", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "{\"dim\":15}\n");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  const auto parse = run({"homdim", "--sigma", "1,2", "--n", "1", "--m", "1"});
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK_FALSE(parse.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"homdim", "--sigma", "2", "--n", "x", "--m", "0"}).code == 2);
  CHECK(run({"homdim", "--sigma", "2", "--n", "9", "--m", "0"}).code == 1);
  CHECK(run({"homdim", "--sigma", "2", "--n", "9", "--m", "0", "--degree-bound", "10"}).code == 0);
  CHECK(run({"homdim", "--sigma", "2|", "--n", "2", "--m", "0"}).code == 1);
  CHECK(run({"ext", "--sigma", "2", "--i", "-1", "--lambda", "1", "--mu", "1"}).code == 1);
  CHECK(run({"traceless", "--sigma", "2", "--rank", "0", "--n", "1", "--seed", "1"}).code == 1);
  CHECK(run({"traceless", "--sigma", "2", "--rank", "3", "--n", "2", "--lambda", "1", "--seed", "1"}).code == 1);
}

TEST_CASE("identical arguments give identical bytes") {
  const std::vector<std::vector<std::string>> jobs{
      {"traceless", "--sigma", "2|1,1", "--rank", "3", "--n", "3", "--lambda", "2,1", "--seed", "9"},
      {"stab", "check", "--sigma", "3", "--rank", "4", "--seed", "2", "--samples", "30"},
      {"shift", "--lambda", "3,1", "--n", "2"},
  };
  for (const auto& job : jobs) {
    const auto a = run(job);
    const auto b = run(job);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
