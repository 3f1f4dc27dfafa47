#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "divbench/genome.hpp"

namespace divbench {

// Diversity measures.

/// Sum of Hamming distances over unordered pairs.
double pairwise_hamming_diversity(const Population& pop);

/// Per-position mean bit value.
std::vector<double> centroid(const Population& pop);

/// Sum over positions and members of the squared deviation from the centroid.
/// Equals pairwise_hamming_diversity(pop) / pop.size().
double inertia_diversity(const Population& pop);

struct FitnessStats {
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;

  friend bool operator==(const FitnessStats&, const FitnessStats&) = default;
};

FitnessStats raw_fitness_stats(const Population& pop);
FitnessStats effective_fitness_stats(const Population& pop);

// Performance measures. A "series" is one run's per-generation maximum raw
// fitness; index 0 is the first recorded generation. Measures taking k look at
// generations 0..k, so k must be smaller than every series length.

using FitnessSeries = std::vector<double>;

/// Mean of the per-generation best-so-far values, where best-so-far restarts
/// at every landscape change. Throws std::invalid_argument on empty input.
double offline_performance(std::span<const double> best_so_far);

/// Per-generation mean of the runs' series. Throws on ragged or empty input.
std::vector<double> best_of_generation(std::span<const FitnessSeries> runs);

/// Mean of best_of_generation over all generations.
double avg_best_of_generation(std::span<const FitnessSeries> runs);

/// Fraction of runs whose series reaches `optimum` at some generation <= k.
double likelihood_of_optimality(std::span<const FitnessSeries> runs, double optimum,
                                std::size_t k);

/// Mean over runs of the best value at generations 0..k.
double average_fitness_value(std::span<const FitnessSeries> runs, std::size_t k);

/// Number of leaps in series[0..k]: generations g in 1..k whose value exceeds
/// every earlier value.
std::size_t count_leaps(std::span<const double> series, std::size_t k);

/// Total leaps over all runs divided by the number of runs.
double likelihood_of_evolution_leap(std::span<const FitnessSeries> runs, std::size_t k);

/// (best - min) / (max - min). Throws std::invalid_argument when max == min.
double optimisation_accuracy(double best, double max_fitness, double min_fitness);

/// max(0, accuracy - previous_accuracy).
double stability(double accuracy, double previous_accuracy);

/// True when every optimum has some member within `proximity` bits of it.
/// Throws std::invalid_argument unless exactly two optima are given.
bool finds_both_peaks(const Population& pop, std::span<const Genome> optima,
                      std::size_t proximity = 10);

/// One row of the per-generation output.
struct GenerationRecord {
  std::size_t run_id = 0;
  std::size_t generation = 0;
  FitnessStats raw;
  FitnessStats effective;
  double inertia_diversity = 0.0;
  std::size_t period_index = 0;
  double best_so_far_in_period = 0.0;

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct RunSummary {
  double offline_performance = 0.0;
  std::vector<double> max_achieved_per_period;
  /// Empty when the landscape does not have exactly two optima.
  std::optional<bool> finds_both_peaks;
  bool optimality_reached = false;
  std::size_t leap_count = 0;
};

/// Offline performance recomputed from a record stream: best-so-far is
/// rebuilt from max raw fitness, restarting whenever period_index changes.
double offline_performance_from_records(std::span<const GenerationRecord> records);

}  // namespace divbench
