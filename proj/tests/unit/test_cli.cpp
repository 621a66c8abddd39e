#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multikostka/cli.hpp"
#include "multikostka/json_io.hpp"

using multikostka::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = multikostka::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"count", "--shape", "6,3,3", "--weight", "5,4,3"});
  CHECK(r.code == 0);
  CHECK(r.doc() == json::parse(R"({"kostka":"1"})"));

  r = run({"mult-one-multi", "--shape", "[[1],[1]]", "--weight", "1,1", "--exit-code"});
  CHECK(r.code == 1);
  CHECK(r.doc() == json::parse(R"({"multiplicity_one":false})"));

  r = run({"count", "--shape", "2,1", "--weight", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.doc() == json::parse(R"({"kostka":"2"})"));
}

TEST_CASE("counting subcommands") {
  CHECK(run({"count", "--shape", "2,1", "--weight", "1,1,1", "--oracle"}).doc()["kostka"] == "2");
  CHECK(run({"count", "--shape", "[2,1]", "--weight", "[1,0,1,1]"}).doc()["kostka"] == "2");
  CHECK(run({"count-multi", "--shape", "[[1],[1]]", "--weight", "1,1"}).doc()["kostka"] == "2");
  CHECK(run({"count-multi", "--shape", "[[1],[1]]", "--weight", "1,1", "--oracle"}).doc()["kostka"] == "2");
  CHECK(run({"count-multi", "--shape", "[2,1]", "--weight", "1,1,1"}).doc()["kostka"] == "2");
}

TEST_CASE("predicates and exit codes") {
  auto r = run({"positive", "--shape", "[[1,1]]", "--weight", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc()["positive"] == false);
  CHECK(run({"positive", "--shape", "[[1,1]]", "--weight", "2", "--exit-code"}).code == 1);
  CHECK(run({"positive", "--shape", "[[1],[1]]", "--weight", "2", "--exit-code"}).code == 0);

  r = run({"mult-one", "--shape", "6,3,3", "--weight", "5,4,3", "--exit-code"});
  CHECK(r.code == 0);
  CHECK(r.doc() == json::parse(R"({"multiplicity_one":true,"certificate":{"indices":[2,3]}})"));
  r = run({"mult-one", "--shape", "2,1", "--weight", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.doc() == json::parse(R"({"multiplicity_one":false})"));

  r = run({"mult-one-multi", "--shape", "[[1],[1]]", "--weight", "2"});
  CHECK(r.doc()["certificate"]["indices"] == json::parse("[1]"));

  CHECK(run({"unique", "--shape", "3,2,1"}).doc()["unique_weight"] == true);
  CHECK(run({"unique", "--shape", "2", "--exit-code"}).code == 1);
  CHECK(run({"unique-multi", "--shape", "[[1],[1]]", "--exit-code"}).code == 0);
  CHECK(run({"unique-multi", "--shape", "[[2],[]]"}).doc()["unique_weight"] == false);
}

TEST_CASE("enumerate and greedy") {
  auto r = run({"enumerate", "--shape", "2,1", "--weight", "1,1,1"});
  CHECK(r.doc()["count"] == "2");
  CHECK(r.doc()["tableaux"].size() == 2);
  CHECK(r.doc()["tableaux"][0] == json::parse(R"({"shape":[2,1],"rows":[[1,2],[3]]})"));
  CHECK(run({"enumerate", "--shape", "2,1", "--weight", "1,1,1", "--count-only"}).doc() ==
        json::parse(R"({"count":"2"})"));

  r = run({"enumerate", "--shape", "[[1],[1]]", "--weight", "1,1"});
  CHECK(r.doc()["count"] == "2");
  CHECK(r.doc()["multitableaux"].size() == 2);
  CHECK(run({"enumerate", "--shape", "[[1],[1]]", "--weight", "1,1", "--count-only"}).doc()["count"] == "2");

  r = run({"greedy", "--shape", "6,3,3", "--weight", "5,4,3"});
  CHECK(r.doc()["tableau"]["rows"] == json::parse("[[1,1,1,1,1,2],[2,2,2],[3,3,3]]"));
}

TEST_CASE("wreath decomposition") {
  auto r = run({"wreath-decompose", "--r", "2", "--d", "1", "--mu", "1"});
  CHECK(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["params"] == json::parse(R"({"r":2,"d":1,"n":1,"mu":[1]})"));
  CHECK(doc["constituents"].size() == 2);
  CHECK(doc["constituents"][0]["multiplicity"] == "1");
  CHECK(run({"wreath-decompose", "--r", "2", "--d", "2", "--mu", "1", "--n", "1"}).doc()["constituents"].size() == 1);
}

TEST_CASE("theta subcommands") {
  const std::string input = R"({"entries":[{"size":2,"partition":[1]},{"size":3,"partition":[1]},{"size":5,"partition":[1]}],"mu":[5,5]})";
  CHECK(run({"ggg-count", "--input", input}).doc()["kostka"] == "2");
  CHECK(run({"ggg-positive", "--input", input, "--exit-code"}).code == 0);
  const std::string equal = R"({"entries":[{"size":2,"partition":[1]},{"size":2,"partition":[1]}],"mu":[4]})";
  CHECK(run({"ggg-mult-one", "--input", equal}).doc()["multiplicity_one"] == true);

  const std::string path = "cli_test_input.json";
  {
    std::ofstream f(path);
    f << input;
  }
  CHECK(run({"ggg-count", "--input", "@" + path}).doc()["kostka"] == "2");
  std::remove(path.c_str());
}

TEST_CASE("errors") {
  auto r = run({"count", "--shape", "2,x", "--weight", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.error()["error"] == "ParseError");

  r = run({"count", "--shape", "3,1", "--weight", "1,1"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "SizeMismatch");

  CHECK(run({"count", "--shape", "1,2", "--weight", "1,2"}).error()["error"] == "NonMonotone");
  CHECK(run({"count", "--shape", "2", "--weight", "-1,3"}).error()["error"] == "Negative");
  CHECK(run({"greedy", "--shape", "1,1", "--weight", "2"}).error()["error"] == "NotDominated");
  CHECK(run({"wreath-decompose", "--r", "3", "--d", "2", "--mu", "1"}).error()["error"] == "InvalidDivisor");
  CHECK(run({"ggg-mult-one", "--input", R"({"entries":[{"size":2,"partition":[1]},{"size":3,"partition":[1]}],"mu":[5]})"})
            .error()["error"] == "UnequalOrbitSizes");
  CHECK(run({"ggg-count", "--input", R"({"entries":[{"size":2,"partition":[]}],"mu":[]})"}).error()["error"] ==
        "EmptyShape");
  CHECK(run({"count", "--shape", "@no-such-file", "--weight", "1"}).error()["error"] == "ParseError");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--shape", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("pretty output re-parses") {
  const auto r = run({"--pretty", "count", "--shape", "2,1", "--weight", "1,1,1"});
  CHECK(r.out.find('\n') < r.out.size() - 1);
  CHECK(r.doc()["kostka"] == "2");
}
