// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsos {

struct CheckResult {
  std::string name;
  std::string status;     // pass | fail | skipped-singular | inconclusive
  double residual = 0.0;  // worst observed
  double tolerance = 0.0;
  int samples = 0;  // evaluated samples
  int skipped = 0;  // singular draws abandoned after retries
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;  // console-only; never serialized

  bool any_fail() const;
};

struct RunReport {
  double x = 0.0;
  double r = 0.0;
  int kmax = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<std::pair<std::string, std::string>> calibrations;
  std::vector<SuiteReport> suites;

  bool any_fail() const;
};

// Deterministic serializations: identical report values produce identical
// bytes (timings are excluded).
std::string report_json(const RunReport& R);
std::string report_csv(const RunReport& R);

std::string status_for(double residual, double tol, int evaluated, int requested);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value lines with optional [section] headers; '#' comments.
struct Config {
  std::map<std::string, std::string> global;
  std::map<std::string, std::map<std::string, std::string>> sections;

  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  double get_num(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;
};

Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

}  // namespace fsos
