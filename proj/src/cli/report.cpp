#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "ybalg/cli.hpp"

namespace ybalg::cli {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string value_text(const Json& v) {
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v)
      if (e.is_structured()) flat = false;
    if (flat) {
      std::string s = "[";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + scalar_text(v[k]);
      return s + "]";
    }
  }
  if (v.is_structured()) return v.dump();
  return scalar_text(v);
}

}  // namespace

Check make_check(std::string name, Json expected, Json actual) {
  const bool pass = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), pass};
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["parameters"] = parameters;
  out["results"] = results;
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  out["checks"] = std::move(list);
  out["status"] = ok() ? "pass" : "fail";
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << report.command;
  for (const auto& [key, value] : report.parameters.items()) os << ' ' << key << '=' << value_text(value);
  os << '\n';
  for (const auto& [key, value] : report.results.items()) {
    if (value.is_array() && !value.empty() && value[0].is_structured()) {
      os << key << ":\n";
      for (const auto& e : value) os << "  " << value_text(e) << '\n';
    } else {
      os << key << ": " << value_text(value) << '\n';
    }
  }
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) os << " (expected " << value_text(c.expected) << ", got " << value_text(c.actual) << ')';
    os << '\n';
  }
  if (!report.checks.empty()) os << "status: " << (report.ok() ? "pass" : "fail") << '\n';
  return os.str();
}

std::vector<Check> run_tasks(const std::vector<std::function<std::vector<Check>()>>& tasks, unsigned jobs) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        results[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Check> merged;
  for (auto& r : results)
    for (auto& c : r) merged.push_back(std::move(c));
  return merged;
}

}  // namespace ybalg::cli
