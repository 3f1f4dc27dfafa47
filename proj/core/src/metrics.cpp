#include "divbench/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace divbench {

namespace {

void require_horizon(std::span<const FitnessSeries> runs, std::size_t k) {
  if (runs.empty()) throw std::invalid_argument("no runs given");
  for (const auto& r : runs) {
    if (k >= r.size()) throw std::invalid_argument("k exceeds a run's generation count");
  }
}

double prefix_max(std::span<const double> series, std::size_t k) {
  return *std::max_element(series.begin(), series.begin() + static_cast<std::ptrdiff_t>(k + 1));
}

template <typename Field>
FitnessStats stats_of(const Population& pop, Field field) {
  if (pop.empty()) throw std::invalid_argument("fitness stats of an empty population");
  FitnessStats s{std::numeric_limits<double>::infinity(), 0.0,
                 -std::numeric_limits<double>::infinity()};
  double sum = 0.0;
  for (const auto& ind : pop) {
    const double f = field(ind);
    s.min = std::min(s.min, f);
    s.max = std::max(s.max, f);
    sum += f;
  }
  // Clamp guards the mean against rounding outside [min, max].
  s.avg = std::clamp(sum / static_cast<double>(pop.size()), s.min, s.max);
  return s;
}

}  // namespace

double pairwise_hamming_diversity(const Population& pop) {
  double total = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    for (std::size_t j = i + 1; j < pop.size(); ++j) {
      total += static_cast<double>(hamming_distance(pop[i].genome, pop[j].genome));
    }
  }
  return total;
}

std::vector<double> centroid(const Population& pop) {
  check_population(pop);
  const std::size_t length = pop.front().genome.length();
  std::vector<double> c(length, 0.0);
  for (const auto& ind : pop) {
    for (std::size_t i = 0; i < length; ++i) c[i] += ind.genome[i] ? 1.0 : 0.0;
  }
  for (auto& v : c) v /= static_cast<double>(pop.size());
  return c;
}

double inertia_diversity(const Population& pop) {
  const auto c = centroid(pop);
  double inertia = 0.0;
  for (const auto& ind : pop) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double dev = (ind.genome[i] ? 1.0 : 0.0) - c[i];
      inertia += dev * dev;
    }
  }
  return inertia;
}

FitnessStats raw_fitness_stats(const Population& pop) {
  return stats_of(pop, [](const Individual& ind) { return ind.raw(); });
}

FitnessStats effective_fitness_stats(const Population& pop) {
  return stats_of(pop, [](const Individual& ind) { return ind.effective_fitness; });
}

double offline_performance(std::span<const double> best_so_far) {
  if (best_so_far.empty()) throw std::invalid_argument("offline performance of an empty series");
  double sum = 0.0;
  for (double v : best_so_far) sum += v;
  return sum / static_cast<double>(best_so_far.size());
}

std::vector<double> best_of_generation(std::span<const FitnessSeries> runs) {
  if (runs.empty()) throw std::invalid_argument("best_of_generation: no runs");
  const std::size_t g = runs.front().size();
  for (const auto& r : runs) {
    if (r.size() != g) throw std::invalid_argument("best_of_generation: runs differ in length");
  }
  std::vector<double> mean(g, 0.0);
  for (const auto& r : runs) {
    for (std::size_t i = 0; i < g; ++i) mean[i] += r[i];
  }
  for (auto& v : mean) v /= static_cast<double>(runs.size());
  return mean;
}

double avg_best_of_generation(std::span<const FitnessSeries> runs) {
  const auto bog = best_of_generation(runs);
  if (bog.empty()) throw std::invalid_argument("avg_best_of_generation: empty runs");
  double sum = 0.0;
  for (double v : bog) sum += v;
  return sum / static_cast<double>(bog.size());
}

double likelihood_of_optimality(std::span<const FitnessSeries> runs, double optimum,
                                std::size_t k) {
  require_horizon(runs, k);
  std::size_t reached = 0;
  for (const auto& r : runs) {
    if (prefix_max(r, k) >= optimum) ++reached;
  }
  return static_cast<double>(reached) / static_cast<double>(runs.size());
}

double average_fitness_value(std::span<const FitnessSeries> runs, std::size_t k) {
  require_horizon(runs, k);
  double sum = 0.0;
  for (const auto& r : runs) sum += prefix_max(r, k);
  return sum / static_cast<double>(runs.size());
}

std::size_t count_leaps(std::span<const double> series, std::size_t k) {
  if (k >= series.size()) throw std::invalid_argument("k exceeds the series length");
  std::size_t leaps = 0;
  double best = series[0];
  for (std::size_t g = 1; g <= k; ++g) {
    if (series[g] > best) {
      ++leaps;
      best = series[g];
    }
  }
  return leaps;
}

double likelihood_of_evolution_leap(std::span<const FitnessSeries> runs, std::size_t k) {
  require_horizon(runs, k);
  std::size_t total = 0;
  for (const auto& r : runs) total += count_leaps(r, k);
  return static_cast<double>(total) / static_cast<double>(runs.size());
}

double optimisation_accuracy(double best, double max_fitness, double min_fitness) {
  if (max_fitness == min_fitness) {
    throw std::invalid_argument("optimisation_accuracy: max and min fitness coincide");
  }
  return (best - min_fitness) / (max_fitness - min_fitness);
}

double stability(double accuracy, double previous_accuracy) {
  return std::max(0.0, accuracy - previous_accuracy);
}

bool finds_both_peaks(const Population& pop, std::span<const Genome> optima,
                      std::size_t proximity) {
  if (optima.size() != 2) throw std::invalid_argument("finds_both_peaks needs exactly 2 optima");
  return std::all_of(optima.begin(), optima.end(), [&](const Genome& peak) {
    return std::any_of(pop.begin(), pop.end(), [&](const Individual& ind) {
      return hamming_distance(ind.genome, peak) <= proximity;
    });
  });
}

double offline_performance_from_records(std::span<const GenerationRecord> records) {
  if (records.empty()) throw std::invalid_argument("offline performance of no records");
  double sum = 0.0;
  double best = records.front().raw.max;
  std::size_t period = records.front().period_index;
  for (const auto& r : records) {
    if (r.period_index != period) {
      period = r.period_index;
      best = r.raw.max;
    }
    best = std::max(best, r.raw.max);
    sum += best;
  }
  return sum / static_cast<double>(records.size());
}

}  // namespace divbench
