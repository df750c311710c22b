#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "strpoly/cli.hpp"

using namespace strpoly;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("z vector lookup") {
  auto r = run({"z", "--n", "5", "--word", "1,2,3,4,1,2,3,1,2,1", "--j", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0,0,1,1,0,1,0,1,0,0)\n");
}

TEST_CASE("point enumeration in json") {
  auto r = run({"points", "--n", "3", "--word", "2,1,2", "--lambda", "1,1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["points"].size() == 8);
  auto parsed = from_polytope_json(j);
  CHECK(parsed.points.size() == 8);
}

TEST_CASE("atom check returns a verdict exit code") {
  auto r = run({"atom-check", "--n", "3", "--word", "2,1,2", "--k", "1", "--i", "2",
                "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["big_atom"] == true);
}

TEST_CASE("default word is the lexicographically least one") {
  auto with_default = run({"cone", "--n", "4", "--format", "json"});
  auto explicit_word =
      run({"cone", "--n", "4", "--word", "1,2,1,3,2,1", "--format", "json"});
  CHECK(with_default.code == 0);
  CHECK(with_default.out == explicit_word.out);
}

TEST_CASE("identical invocations produce identical bytes") {
  std::vector<std::vector<std::string>> invocations = {
      {"crystal-graph", "--n", "3", "--word", "2,1,2", "--lambda", "1,1", "--format", "json"},
      {"polytope", "--n", "3", "--word", "1,2,1", "--lambda", "2,1", "--format", "json"},
      {"embed-check", "--n", "3", "--word", "2,1,2", "--lambda", "1,1", "--j", "1",
       "--format", "json"},
      {"project", "--n", "4", "--lambda", "1,0,1", "--j", "2", "--format", "json"},
      {"oracle-compare", "--n", "3", "--word", "2,1,2", "--lambda", "2,2"},
  };
  for (const auto& args : invocations) {
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("parallel fan-out does not change the bytes") {
  std::vector<std::string> base = {"embed-check", "--n", "4", "--lambda", "1,0,1",
                                   "--j",         "1",  "--format", "json"};
  auto serial = run(base);
  auto parallel = base;
  parallel.push_back("--jobs");
  parallel.push_back("4");
  auto forked = run(parallel);
  CHECK(serial.code == 0);
  CHECK(forked.code == serial.code);
  CHECK(forked.out == serial.out);
}

TEST_CASE("verdict exit codes distinguish pass and fail") {
  auto ok = run({"embed-check", "--n", "3", "--word", "2,1,2", "--lambda", "1,1", "--j", "2"});
  CHECK(ok.code == 0);
  auto comparison = run({"oracle-compare", "--n", "4", "--lambda", "1,0,1"});
  CHECK(comparison.code == 0);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run({"points", "--n", "3"}).code == 64);                        // missing λ
  CHECK(run({"z", "--n", "3", "--word", "1,1,1", "--j", "1"}).code == 64);  // not reduced
  CHECK(run({"nonsense"}).code == 64);
  CHECK(run({"points", "--n", "3", "--lambda", "-1,0"}).code == 64);
  CHECK(run({"z", "--n", "3", "--word", "2,1,2", "--j", "7"}).code == 64);
}

TEST_CASE("output can be redirected to a file") {
  std::string path = "cli_out_test.json";
  auto r = run({"z", "--n", "3", "--word", "2,1,2", "--j", "1", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  CHECK(j["coords"] == std::vector<int>{0, 1, 1});
  std::remove(path.c_str());
}

TEST_CASE("help is exit zero") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("atom-check") != std::string::npos);
}

TEST_CASE("dot output for graphs") {
  auto r = run({"crystal-graph", "--n", "2", "--word", "1", "--lambda", "3", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  auto w = run({"cone", "--n", "3", "--word", "2,1,2", "--format", "dot"});
  CHECK(w.code == 0);
  CHECK(w.out.find("digraph wiring") != std::string::npos);
}
