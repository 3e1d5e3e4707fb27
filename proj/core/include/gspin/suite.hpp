#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gspin/json_io.hpp"

namespace gspin {

struct SuiteConfig {
  std::uint64_t seed = 7;
  double tolerance = 1e-8;
  int truncation = 200;
  std::vector<int> criteria;  // empty means all
  unsigned threads = 0;       // 0: hardware concurrency capped by GSPIN_LAB_THREADS
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  Json metrics;
};

inline constexpr int kCriterionCount = 8;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const SuiteConfig& config);
// Runs the selected criteria on a worker pool; output order and content do
// not depend on scheduling.
Json run_suite(const SuiteConfig& config);
unsigned suite_thread_count(const SuiteConfig& config);

}  // namespace gspin
