// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "gspin/suite.hpp"

namespace {

using gspin::Json;

// Runtime limits in seconds; criteria without a limit use 0.
constexpr double kRuntimeLimit[gspin::kCriterionCount + 1] = {0, 60, 0, 0, 0, 0, 0, 120, 300};

// Compact rendering of the counters and scalars in a metrics object.
void summarize(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object() && j.contains("passed") && j.contains("total")) {
    out << ' ' << prefix << '=' << j["passed"].get<std::size_t>() << '/' << j["total"].get<std::size_t>();
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object() && j.front().contains("pass")) {
    std::size_t passed = 0;
    for (const auto& x : j) passed += x["pass"].get<bool>();
    out << ' ' << prefix << '=' << passed << '/' << j.size();
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) summarize(v, prefix.empty() ? k : prefix + '.' + k, out);
    return;
  }
  if (j.is_number() || j.is_boolean()) out << ' ' << prefix << '=' << j.dump();
}

}  // namespace

int main() {
  gspin::SuiteConfig config;
  config.seed = 7;
  config.tolerance = 1e-8;
  config.truncation = 200;
  bool all = true;

  for (int id = 1; id <= gspin::kCriterionCount; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    gspin::SuiteConfig one = config;
    one.criteria = {id};
    Json report = gspin::run_suite(one);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Json& c = report["criteria"][0];
    bool in_time = kRuntimeLimit[id] == 0 || seconds < kRuntimeLimit[id];
    bool pass = c["pass"].get<bool>() && in_time;
    all = all && pass;
    std::ostringstream detail;
    summarize(c["metrics"], "", detail);
    if (c.contains("error")) detail << " error=" << c["error"].get<std::string>();
    std::printf("%s %d %s:%s (%.2f s", pass ? "PASS" : "FAIL", id, c["name"].get<std::string>().c_str(),
                detail.str().c_str(), seconds);
    if (kRuntimeLimit[id] > 0) std::printf(" < %.0f s", kRuntimeLimit[id]);
    std::printf(")\n");
    std::fflush(stdout);
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string first = gspin::run_suite(config).dump(2);
  std::string second = gspin::run_suite(config).dump(2);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool same = first == second;
  all = all && same;
  std::printf("%s 9 determinism: two full suite runs with seed %llu produce %s JSON (%zu bytes, %u threads, %.2f s)\n",
              same ? "PASS" : "FAIL", static_cast<unsigned long long>(config.seed),
              same ? "byte-identical" : "different", first.size(), gspin::suite_thread_count(config), seconds);
  return all ? 0 : 1;
}
