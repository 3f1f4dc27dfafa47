#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divbench/config.hpp"
#include "divbench/metrics.hpp"

namespace divbench {

struct RunResult {
  std::vector<GenerationRecord> records;
  RunSummary summary;
};

/// One seeded run on stream (cfg.base_seed, run_index).
///
/// Per generation g: landscape changes scheduled at g are applied and the whole
/// population is re-evaluated, then the mechanism step runs, then a record is
/// taken. Emits exactly cfg.generations records.
RunResult run_single(const ExperimentConfig& cfg, std::size_t run_index);

struct AggregateResult {
  Algorithm algorithm = Algorithm::basic;
  std::string problem;
  std::size_t runs = 0;
  /// Field-wise means across runs, one per generation (run_id is 0).
  std::vector<GenerationRecord> mean_records;
  double offline_performance = 0.0;
  std::vector<double> max_achieved_per_period;
  /// Empty when the problem does not have exactly two optima.
  std::optional<double> finds_both_peaks_fraction;
  double optimality_fraction = 0.0;
  double mean_leaps = 0.0;
};

/// Averages finished runs. Runs must be ordered by run index and have equal
/// record counts; throws std::invalid_argument otherwise.
AggregateResult aggregate(std::span<const RunResult> runs, Algorithm algorithm,
                          const std::string& problem);

struct ReplicatedResult {
  AggregateResult aggregate;
  std::vector<RunResult> runs;  ///< ordered by run index
};

/// Runs 0..cfg.runs-1, in parallel when cfg.threads allows, then aggregates in
/// run order.
ReplicatedResult run_replicated(const ExperimentConfig& cfg);

}  // namespace divbench
