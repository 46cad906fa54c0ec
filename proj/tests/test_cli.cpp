#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ferrers::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("shift") {
  CHECK(run({"shift", "--op", "phi-star", "--k", "4", "--perm", "7 4 6 3 5 2 1"}).out == "3 2 6 1 5 7 4\n");
  CHECK(run({"shift", "--op", "psi", "--k", "4", "--perm", "7 4 6 3 5 2 1"}).out == "4 3 6 2 5 7 1\n");
  CHECK(run({"shift", "--op", "phi", "--k", "2", "--perm", "1 2"}).out == "1 2\n");
  CHECK(run({"shift", "--op", "program", "--program", "phi phi", "--k", "4", "--perm", "7463521"}).out ==
        "3 2 6 1 5 7 4\n");

  const auto traced = run({"shift", "--op", "phi-star", "--k", "4", "--perm", "7 4 6 3 5 2 1", "--trace"});
  CHECK(traced.out.find("step 2: phi") != std::string::npos);
  CHECK(traced.out.find("inv 18 -> 15") != std::string::npos);

  const auto js = nlohmann::json::parse(
      run({"shift", "--op", "normal-form", "--strategy", "random", "--seed", "5", "--k", "4", "--perm",
           "7 6 4 2 5 3 1", "--format", "json"})
          .out);
  CHECK(js["result"] == std::vector<int>{4, 2, 1, 7, 5, 3, 6});
  CHECK(js["step_count"] == 2);
}

TEST_CASE("count") {
  CHECK(run({"count", "--board", "4,4,4,4", "--avoid", "321"}).out == "14\n");
  CHECK(run({"count", "--n", "4", "--avoid", "1234", "--involutions"}).out == "9\n");
  CHECK(run({"count", "--n", "0", "--avoid", "21"}).out == "1\n");
  const auto js = nlohmann::json::parse(run({"count", "--n", "5", "--avoid", "321", "--format", "json"}).out);
  CHECK(js["count"] == 42);
  CHECK(js["board"] == std::vector<int>{5, 5, 5, 5, 5});
}

TEST_CASE("verify") {
  const auto c = run({"verify", "commutation", "--n", "6", "--k", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("PASS commutation", 0) == 0);
  CHECK(c.out.find("720 checked") != std::string::npos);
  CHECK(run({"verify", "motzkin", "--n-max", "7"}).code == 0);
  CHECK(run({"verify", "bwx", "--board", "3,3,3", "--k", "2"}).code == 0);
  CHECK(run({"verify", "confluence", "--n", "4", "--k", "2", "--seed", "1"}).code == 0);
  CHECK(run({"verify", "wilf", "--n", "6", "--k", "4", "--avoid", "1234"}).code == 0);
  CHECK(run({"verify", "involutions", "--n", "5", "--all-boards", "--k", "3"}).code == 0);
  const auto js = nlohmann::json::parse(run({"verify", "local", "--n", "5", "--k", "3", "--format", "json"}).out);
  CHECK(js["passed"] == true);
  CHECK(js["checked"] == 120);
}

TEST_CASE("graph") {
  CHECK(run({"graph", "--k", "2", "--seed-perm", "1 2"}).out == "digraph {\n  \"1 2\";\n}\n");
  const auto g = run({"graph", "--k", "4", "--seed-perm", "7 6 4 2 5 3 1", "--format", "json"});
  CHECK(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["nodes"].size() > 2);
}

TEST_CASE("usage and data errors map to exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"shift", "--op", "phi", "--k", "1", "--perm", "2 1"}).code == 2);
  CHECK(run({"shift", "--op", "teleport", "--k", "2", "--perm", "2 1"}).code == 2);
  CHECK(run({"shift", "--op", "phi", "--k", "2", "--perm", "2 x"}).code == 2);
  CHECK(run({"shift", "--op", "phi", "--k", "2", "--perm", "2 2"}).code == 3);
  CHECK(run({"shift", "--op", "phi", "--k", "2", "--perm", "1 2", "--board", "2,1"}).code == 3);
  CHECK(run({"count", "--n", "13", "--avoid", "21"}).code == 2);
  CHECK(run({"count", "--n", "3"}).code == 2);
  CHECK(run({"verify", "confluence", "--n", "3", "--k", "2"}).code == 2);  // random strategies need a seed
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"graph", "--k", "2", "--seed-perm", "12", "--format", "svg"}).code == 2);
  const auto r = run({"count", "--n", "3"});
  CHECK(r.err.find("--avoid") != std::string::npos);
}

TEST_CASE("inspect") {
  const auto r = run({"inspect", "--k", "4", "--perm", "7 4 6 3 5 2 1"});
  CHECK(r.out.find("labels: 5 4 4 3 3 2 1") != std::string::npos);
  CHECK(r.out.find("A-sequence: values 4 3 2 1 at columns 2 4 6 7") != std::string::npos);
  CHECK(r.out.find("B-sequence: values 7 4 3 2 at columns 1 2 4 6") != std::string::npos);
}
