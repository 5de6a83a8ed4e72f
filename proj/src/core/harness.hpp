#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kgon::harness {

struct Config {
  std::uint64_t seed = 20250810;
  int jobs = 0;
  std::string db_path;          // optional order-type database for n = 9
  bool deterministic = false;   // zero out runtime fields in reports
  long long random_patience = 4000;  // sampling patience for k = 7 profiles
};

struct CheckResult {
  std::string id;
  std::string status;  // pass | fail | skip
  std::string measured;
  std::string expected;
  long long runtime_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  long long runtime_ms = 0;
  bool all_passed() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const Config& cfg);
std::string report_json(const SuiteReport& report, const Config& cfg);

struct GrowthFit {
  double slope = 0.0;
  double residual = 0.0;
};

// Least-squares slope of log(count) against log(n); needs four positive
// data points.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& series);

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace kgon::harness
