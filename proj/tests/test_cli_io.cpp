#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "unigraph/error.hpp"
#include "unigraph/io.hpp"

using namespace unigraph;

namespace {

const std::string kFixtures = UNIGRAPH_FIXTURES;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("digraph parsing") {
  CHECK(parse_digraph("2\n0 1\n1 0\n") == complete_graph(2));
  const Digraph j = parse_digraph(R"({"n": 3, "adjacency": [[0,1,1],[1,0,1],[1,1,0]]})");
  CHECK(j == complete_graph(3));
  try {
    parse_digraph("1\n2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_digraph("2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph(R"({"n": 2, "adjacency": [[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_digraph("{not json"), ParseError);
  CHECK(parse_multidigraph("1\n2\n").multiplicities()(0, 0) == 2);
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + trial % 9, 0.4);
    CHECK(parse_digraph(to_text(d)) == d);
    CHECK(parse_digraph(to_json_text(d)) == d);
  }
  ComplexMatrix m = dft(3);
  CHECK((matrix_from_json(matrix_to_json(m)) - m).cwiseAbs().maxCoeff() == 0.0);
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("exit codes") {
  CHECK(run({"certify", "--in", kFixtures + "/z4.json", "--seed", "7"}).code == cli::kCertified);
  CHECK(run({"analyze", "--in", kFixtures + "/dipath3.txt"}).code == cli::kExcluded);
  CHECK(run({"analyze", "--in", kFixtures + "/k2.txt"}).code == cli::kUndecided);
  CHECK(run({"analyze", "--in", kFixtures + "/truncated.txt"}).code == cli::kUsage);
  CHECK(run({"analyze", "--in", kFixtures + "/missing.json"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"certify", "--in", kFixtures + "/z4.json", "--tol", "-1"}).code == cli::kUsage);
  CHECK(run({"theorem1", "--group", "S:7", "--gens", "(1 2),(1 2 3 4 5 6 7)"}).code == cli::kCapacity);
  CHECK(run({"survey", "--max-n", "9"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("run report") {
  const CliRun o = run({"certify", "--in", kFixtures + "/z4.json", "--seed", "7"});
  const Json j = Json::parse(o.out);
  CHECK(j["schema"] == 1);
  CHECK(j["tool"] == "unigraph");
  CHECK(j["exit_code"] == 0);
  CHECK(j["input_digest"] == hex64(fnv1a64(read_file(kFixtures + "/z4.json"))));
  CHECK(j["result"]["certificate"]["kind"] == "numerical");
  CHECK(j.back().is_number());
  const CliRun text = run({"analyze", "--in", kFixtures + "/dipath3.txt", "--format", "text"});
  CHECK(text.out.find("conditions:") != std::string::npos);
}

TEST_CASE("cayley output matches the independent fixture") {
  const std::string path = (std::filesystem::temp_directory_path() / "unigraph_z8_1_5.json").string();
  REQUIRE(run({"cayley", "--group", "Z:8", "--gens", "1,5", "--out", path}).code == 0);
  CHECK(read_file(path) == read_file(kFixtures + "/z8_1_5.json"));
  std::filesystem::remove(path);
}
