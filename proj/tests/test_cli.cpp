#include "closefact/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace closefact;
using closefact::report::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json only_record(const Result& r) {
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  std::string rest;
  CHECK_FALSE(std::getline(in, rest));
  return Json::parse(line);
}

}  // namespace

TEST_CASE("solve") {
  const Result r = run({"solve", "--a1", "1", "--b1", "2", "--a2", "3", "--b2", "5"});
  CHECK(r.code == cli::kExitOk);
  const Json j = only_record(r);
  CHECK(j["n"] == "180");
  CHECK(j["A"] == "9");

  const Result none = run({"solve", "--a1", "1", "--b1", "1", "--a2", "2", "--b2", "3"});
  CHECK(none.code == cli::kExitOk);
  CHECK(only_record(none)["kind"] == "no_solution");

  CHECK(run({"solve", "--a1", "2", "--b1", "1", "--a2", "2", "--b2", "3"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--a1", "x", "--b1", "1", "--a2", "2", "--b2", "3"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--a1", "1"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"family"}).code == cli::kExitUsage);
  CHECK(run({"family", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "family", "--n", "1"}).code == cli::kExitUsage);
  CHECK(run({"--workers", "0", "scan-gaps", "--from", "2", "--to", "10"}).code == cli::kExitUsage);
  CHECK(run({"scan-gaps", "--from", "2", "--to", "1000", "--sieve-ceiling", "100"}).code ==
        cli::kExitUsage);
  const Result help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("scan-gaps") != std::string::npos);
}

TEST_CASE("family") {
  const Json j = only_record(run({"family", "--n", "2"}));
  CHECK(j["kind"] == "family");
  CHECK(j["n"] == "2520");
  CHECK(j["cor1_margin"] == true);

  const Result range = run({"family", "--from", "1", "--to", "5"});
  CHECK(range.code == cli::kExitOk);
  CHECK(std::count(range.out.begin(), range.out.end(), '\n') == 5);

  const Json t = only_record(run({"family", "--threshold", "100"}));
  CHECK(t["N0"] == 2);
}

TEST_CASE("scan-c, triples, classify, cross-check, quad-from-points") {
  const Result c = run({"scan-c", "--c", "13"});
  CHECK(c.code == cli::kExitOk);
  CHECK(only_record(c)["max_B"] == "468");

  const Result t = run({"triples", "--n", "12", "--min-gap"});
  CHECK(only_record(t)["x"] == Json::array({"2", "3", "4"}));

  const Result cls = run({"classify", "--a1", "3", "--b1", "2", "--a2", "5", "--b2", "3"});
  CHECK(cls.code == cli::kExitOk);
  const Json cj = only_record(cls);
  CHECK(cj["case"] == "Case3");
  CHECK(cj["witnesses"]["A_dprime"] == "3");

  const Result x = run({"cross-check", "--n-max", "500", "--c", "6"});
  CHECK(x.code == cli::kExitOk);
  CHECK(only_record(x)["violation_count"] == 0);

  const Result q = run({"quad-from-points", "--x1", "9", "--y1", "20", "--x2", "10", "--y2", "18",
                        "--x3", "12", "--y3", "15"});
  CHECK(q.code == cli::kExitOk);
  CHECK(only_record(q)["b2"] == 5);
  CHECK(run({"quad-from-points", "--x1", "9", "--y1", "20", "--x2", "10", "--y2", "18", "--x3",
             "12", "--y3", "16"})
            .code == cli::kExitUsage);
}

TEST_CASE("scan-gaps output does not depend on workers") {
  const Result one = run({"--workers", "1", "scan-gaps", "--from", "2", "--to", "30000"});
  const Result four = run({"--workers", "4", "scan-gaps", "--from", "2", "--to", "30000"});
  CHECK(one.code == cli::kExitOk);
  CHECK(one.out == four.out);

  setenv("CLOSEFACT_WORKERS", "3", 1);
  const Result env = run({"scan-gaps", "--from", "2", "--to", "30000"});
  CHECK(env.out == one.out);
  setenv("CLOSEFACT_WORKERS", "nope", 1);
  CHECK(run({"scan-gaps", "--from", "2", "--to", "100"}).code == cli::kExitUsage);
  unsetenv("CLOSEFACT_WORKERS");
}

TEST_CASE("csv and human formats") {
  const Result csv = run({"--format", "csv", "triples", "--n", "180", "--consecutive"});
  CHECK(csv.code == cli::kExitOk);
  CHECK(csv.out.rfind("kind,n,A,B", 0) == 0);

  const Result human = run({"--format", "human", "family", "--n", "1"});
  CHECK(human.out.find("attains_bound") != std::string::npos);
}
