#pragma once

// Command-line front end: subcommands, JSON/text reports and the
// cross-module verification suite.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybalg/ncalg.hpp"

namespace ybalg::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

/// pass is expected == actual.
Check make_check(std::string name, Json expected, Json actual);

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  bool ok() const;
  Json to_json() const;
};

std::string render_text(const Report& report);

struct VerifyOptions {
  int n_max = 3;
  Caps caps;
  unsigned jobs = 1;
  bool inject_fault = false;
};

/// Runs every cross-module check for sizes up to n_max. Independent tasks run
/// on `jobs` threads; checks are merged in task order.
Report verify_suite(const VerifyOptions& options);

/// Runs `tasks` on up to `jobs` threads and concatenates their checks in index order.
std::vector<Check> run_tasks(const std::vector<std::function<std::vector<Check>()>>& tasks, unsigned jobs);

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or resource error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ybalg::cli
