// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fsos/params.hpp"
#include "fsos/report.hpp"
#include "fsos/rng.hpp"

namespace fsos {

struct SuiteOptions {
  double x = 0.3;
  double r = 5.7;
  int kmax = 3;
  double tol = 1e-8;
  std::uint64_t seed = 20260819ULL;
  int samples = 20;
  int char_depth = 20;
  bool parallel = true;
};

// Canonical suite order; "all" expands to every entry.
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

struct SweepOutcome {
  double worst = 0.0;
  int evaluated = 0;
  int skipped = 0;
};

// Randomized property sweep.  Each sample index derives its own RNG stream
// from (seed, tag, index), so results do not depend on execution order; a
// draw whose kernel throws or produces a non-finite value is retried on the
// same stream up to 100 times before the index counts as skipped.
SweepOutcome sweep(std::uint64_t seed, const std::string& tag, int n,
                   const std::function<double(Sampler&)>& kernel, bool parallel = true);

// Runs the requested suites (ids may include "all"); per-suite [section]
// entries in cfg override tol and samples.
RunReport run_suites(const std::vector<std::string>& ids, const SuiteOptions& opt,
                     const Config& cfg = Config{});

}  // namespace fsos
