#include "divbench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "divbench/landscape.hpp"
#include "divbench/mechanisms.hpp"

namespace divbench {

RunResult run_single(const ExperimentConfig& cfg, std::size_t run_index) {
  cfg.validate();
  const ProblemPreset preset = make_preset(cfg.problem, cfg.genome_length);
  RandomSource rng(cfg.base_seed, run_index);

  Landscape landscape = preset.initial;
  Evolution evolution(cfg.algorithm, cfg.mu, cfg.genome_length, cfg.variation, cfg.mechanism,
                      landscape, rng);

  constexpr double kNone = -std::numeric_limits<double>::infinity();
  RunResult result;
  result.records.reserve(cfg.generations);
  result.summary.max_achieved_per_period.push_back(kNone);

  std::vector<double> best_so_far;
  std::vector<double> max_series;
  best_so_far.reserve(cfg.generations);
  max_series.reserve(cfg.generations);

  std::size_t next_event = 0;
  std::size_t period = 0;
  double best = kNone;
  for (std::size_t g = 0; g < cfg.generations; ++g) {
    while (next_event < preset.schedule.size() &&
           preset.schedule[next_event].at_generation <= g) {
      landscape = apply_change(landscape, preset.schedule[next_event], rng);
      evolution.reevaluate(landscape);
      ++next_event;
      ++period;
      best = kNone;
      result.summary.max_achieved_per_period.push_back(kNone);
    }

    evolution.step(landscape, cfg.lambda, g, rng);
    const Population pop = evolution.population();

    GenerationRecord rec;
    rec.run_id = run_index;
    rec.generation = g;
    rec.raw = raw_fitness_stats(pop);
    rec.effective = effective_fitness_stats(pop);
    rec.inertia_diversity = inertia_diversity(pop);
    rec.period_index = period;
    best = std::max(best, rec.raw.max);
    rec.best_so_far_in_period = best;

    auto& period_max = result.summary.max_achieved_per_period.back();
    period_max = std::max(period_max, rec.raw.max);
    if (rec.raw.max >= landscape.max_fitness()) result.summary.optimality_reached = true;

    best_so_far.push_back(best);
    max_series.push_back(rec.raw.max);
    result.records.push_back(rec);
  }

  result.summary.offline_performance = offline_performance(best_so_far);
  result.summary.leap_count = count_leaps(max_series, max_series.size() - 1);
  const auto optima = landscape.reference_optima();
  if (optima.size() == 2) {
    result.summary.finds_both_peaks =
        finds_both_peaks(evolution.population(), optima, cfg.both_peaks_proximity);
  }
  return result;
}

AggregateResult aggregate(std::span<const RunResult> runs, Algorithm algorithm,
                          const std::string& problem) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  const std::size_t generations = runs.front().records.size();
  const std::size_t periods = runs.front().summary.max_achieved_per_period.size();
  for (const auto& r : runs) {
    if (r.records.size() != generations) {
      throw std::invalid_argument("aggregate: runs have different generation counts");
    }
    if (r.summary.max_achieved_per_period.size() != periods) {
      throw std::invalid_argument("aggregate: runs have different period counts");
    }
  }

  const auto n = static_cast<double>(runs.size());
  AggregateResult agg;
  agg.algorithm = algorithm;
  agg.problem = problem;
  agg.runs = runs.size();
  agg.mean_records.resize(generations);
  agg.max_achieved_per_period.assign(periods, 0.0);

  for (std::size_t g = 0; g < generations; ++g) {
    GenerationRecord m;
    m.generation = runs.front().records[g].generation;
    m.period_index = runs.front().records[g].period_index;
    m.raw = {0.0, 0.0, 0.0};
    m.effective = {0.0, 0.0, 0.0};
    for (const auto& r : runs) {
      const auto& rec = r.records[g];
      m.raw.min += rec.raw.min;
      m.raw.avg += rec.raw.avg;
      m.raw.max += rec.raw.max;
      m.effective.min += rec.effective.min;
      m.effective.avg += rec.effective.avg;
      m.effective.max += rec.effective.max;
      m.inertia_diversity += rec.inertia_diversity;
      m.best_so_far_in_period += rec.best_so_far_in_period;
    }
    m.raw.min /= n;
    m.raw.avg /= n;
    m.raw.max /= n;
    m.effective.min /= n;
    m.effective.avg /= n;
    m.effective.max /= n;
    m.inertia_diversity /= n;
    m.best_so_far_in_period /= n;
    agg.mean_records[g] = m;
  }

  std::size_t both = 0;
  bool both_defined = true;
  std::size_t optimal = 0;
  double leaps = 0.0;
  for (const auto& r : runs) {
    agg.offline_performance += r.summary.offline_performance;
    for (std::size_t p = 0; p < periods; ++p) {
      agg.max_achieved_per_period[p] += r.summary.max_achieved_per_period[p];
    }
    if (r.summary.finds_both_peaks) {
      both += *r.summary.finds_both_peaks ? 1 : 0;
    } else {
      both_defined = false;
    }
    optimal += r.summary.optimality_reached ? 1 : 0;
    leaps += static_cast<double>(r.summary.leap_count);
  }
  agg.offline_performance /= n;
  for (auto& v : agg.max_achieved_per_period) v /= n;
  if (both_defined) agg.finds_both_peaks_fraction = static_cast<double>(both) / n;
  agg.optimality_fraction = static_cast<double>(optimal) / n;
  agg.mean_leaps = leaps / n;
  return agg;
}

ReplicatedResult run_replicated(const ExperimentConfig& cfg) {
  cfg.validate();
  ReplicatedResult out;
  out.runs.resize(cfg.runs);

  std::size_t workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, cfg.runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t r = next++; r < cfg.runs; r = next++) {
      try {
        out.runs[r] = run_single(cfg, r);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  out.aggregate = aggregate(out.runs, cfg.algorithm, cfg.problem);
  return out;
}

}  // namespace divbench
