#include <sstream>

#include "doctest.h"
#include "ybalg/cli.hpp"

using namespace ybalg::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  const auto r = run_cli(args);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hilbert coefficients") {
    const auto j = run_json({"hilbert", "--algebra", "tr", "--n", "4", "--degree", "5", "--format", "json"});
    CHECK(j["results"]["coeffs"] == Json::parse(R"(["1","6","29","133","601","2704"])"));
    CHECK(j["status"] == "pass");
  }

  TEST_CASE("complex homology") {
    const auto j = run_json({"complex", "--space", "C", "--n", "3"});
    CHECK(j["results"]["homology_ranks"] == Json::parse(R"(["1","3","1"])"));
    for (const auto& g : j["results"]["homology"]) CHECK(g["torsion"].empty());
  }

  TEST_CASE("normal form") {
    const auto j = run_json({"normal-form", "--n", "3", "r(2,3)*r(1,2)"});
    CHECK(j["results"]["normal_form"] ==
          "r(1,2)*r(1,3) + r(1,2)*r(2,3) - r(1,3)*r(1,2) + r(1,3)*r(2,3) - r(2,3)*r(1,3)");
    CHECK(j["results"]["terms"].size() == 5);
  }

  TEST_CASE("univ label") {
    const auto j = run_json({"univ", "--n", "4", "r(3,4)*r(2,4)*r(2,3)*r(1,2)*r(1,3)*r(1,4)"});
    CHECK(j["results"]["label"] == Json::parse(R"({"k":[3,5,6,6],"l":[0,1,3,6],"sigma":[1,5,2,6,4,3]})"));
  }

  TEST_CASE("subcommands that report checks") {
    CHECK(run_json({"dims", "--algebra", "tr", "--n", "3", "--degree", "4", "--lie"})["status"] == "pass");
    CHECK(run_json({"dims", "--algebra", "qtr0", "--n", "3", "--degree", "3"})["status"] == "pass");
    CHECK(run_json({"count-legal", "--n", "3", "--degree", "5", "--convention", "sec6"})["status"] == "pass");
    CHECK(run_json({"enumerate-legal", "--n", "3", "--degree", "2"})["results"]["count"] == "8");
    CHECK(run_json({"dual", "--what", "a-basis", "--n", "4"})["results"]["counts"] ==
          Json::parse(R"(["1","6","7","1"])"));
    CHECK(run_json({"dual", "--what", "qa0", "--n", "3"})["status"] == "pass");
    CHECK(run_json({"dual", "--what", "nbc", "--sites", "1,2,3"})["results"]["basis"].size() == 2);
    CHECK(run_json({"dual", "--what", "orthogonality", "--kind", "QA", "--n", "3"})["status"] == "pass");
    CHECK(run_json({"dual", "--what", "dims", "--kind", "A", "--n", "4"})["results"]["dims"] ==
          Json::parse(R"(["1","6","7","1"])"));
    CHECK(run_json({"univ", "--n", "3", "--degree", "4"})["status"] == "pass");
    CHECK(run_json({"morphism", "--map", "psi", "--n", "4"})["status"] == "pass");
    CHECK(run_json({"morphism", "--map", "broken", "--n", "3"})["status"] == "pass");
    CHECK(run_json({"morphism", "--map", "cabling", "--algebra", "qtr", "--n", "3", "--m", "2"})["status"] == "pass");
  }

  TEST_CASE("known failing checks exit with 1") {
    const auto j = run_json({"count-legal", "--n", "4", "--degree", "3"}, 1);
    CHECK(j["status"] == "fail");
    CHECK(j["results"]["counts"][3] == "134");
  }

  TEST_CASE("usage and resource errors exit with 2 and print nothing") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"hilbert", "--algebra", "pb", "--n", "3"},
             {"hilbert", "--n", "x"},
             {"complex", "--space", "P", "--n", "5", "--max-cells", "10"},
             {"dims", "--algebra", "tr", "--n", "6", "--degree", "6", "--max-columns", "1000"},
             {"normal-form", "--n", "3", "r(1,2"},
             {"univ", "--n", "3", "r(1,2)*r(2,3)"},
             {"hilbert", "--format", "xml"}}) {
      const auto r = run_cli(args);
      CHECK(r.code == 2);
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }

  TEST_CASE("text output") {
    const auto r = run_cli({"complex", "--space", "QC", "--n", "2", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS complex is minimal") != std::string::npos);
  }

  TEST_CASE("output is deterministic and timing is opt-in") {
    const std::vector<std::string> args{"verify", "--n", "2", "--jobs", "2"};
    const auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).count("timing") == 0);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(Json::parse(run_cli(timed).out).count("timing") == 1);
  }

  TEST_CASE("verify passes by default and catches an injected fault") {
    const auto good = run_cli({"verify", "--n", "3"});
    CHECK(good.code == 0);
    const auto bad = run_cli({"verify", "--n", "3", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out)["status"] == "fail");
  }

  TEST_CASE("job count does not change verify results") {
    const auto one = Json::parse(run_cli({"verify", "--n", "3", "--jobs", "1"}).out);
    const auto three = Json::parse(run_cli({"verify", "--n", "3", "--jobs", "3"}).out);
    CHECK(one["checks"] == three["checks"]);
    CHECK(one["results"] == three["results"]);
  }

  TEST_CASE("task pool merges by index and propagates errors") {
    std::vector<std::function<std::vector<Check>()>> tasks;
    for (int k = 0; k < 20; ++k)
      tasks.push_back([k] { return std::vector<Check>{make_check(std::to_string(k), k, k)}; });
    const auto merged = run_tasks(tasks, 4);
    REQUIRE(merged.size() == 20);
    for (int k = 0; k < 20; ++k) CHECK(merged[k].name == std::to_string(k));
    tasks.push_back([]() -> std::vector<Check> { throw std::runtime_error("boom"); });
    CHECK_THROWS_AS(run_tasks(tasks, 3), std::runtime_error);
  }
}
