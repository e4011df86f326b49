#pragma once

// The seeded invariant suite behind `gauss_hodge verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gauss_hodge/io.hpp"

namespace gauss_hodge {

enum class Mode { exact, floating };

struct RunConfig {
  Mode mode = Mode::exact;
  int n = 2;        // real dimension for real checks, complex dimension for complex ones
  int degree = 6;   // field capacity
  int trials = 10;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
};

// Throws std::invalid_argument describing the first bad setting.
void validate(const RunConfig& cfg);

struct SuiteResult {
  std::vector<Json> records;  // one per check, sorted by trial then check
  Json summary;
  bool all_pass = true;
  Json first_failure;  // null when everything passed
};

SuiteResult run_verify(const RunConfig& cfg);

// Threads allowed by GAUSS_HODGE_THREADS (default: hardware concurrency).
int worker_count();

// Calls fn(i) for i in [0, count) on up to worker_count() threads.  The first
// exception thrown by any call is rethrown after all workers stop.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace gauss_hodge
