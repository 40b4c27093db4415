#pragma once

#include "joints/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace joints {

struct ExperimentConfig {
  std::string experiment;
  /// Empty means the experiment's default.
  std::vector<int> r_values;
  std::vector<int> n_values;
  int seeds = 0;
  std::uint64_t base_seed = 1;
  Rational alpha{1, 10000};
  unsigned threads = 0;
};

struct ExperimentResult {
  std::string experiment;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Machine-readable failure records; empty iff every asserted check passed.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& experiment_names();

/// Throws InvalidParam for unknown experiments or empty ranges.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV or JSON text; `timestamp` adds a leading "# generated ..." line (CSV)
/// or a "generated" field (JSON).
std::string render(const ExperimentResult& result, const std::string& format, bool timestamp);

}  // namespace joints
