#include "divbench/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <locale>
#include <ostream>
#include <stdexcept>

#include "divbench/errors.hpp"
#include "divbench/random.hpp"

namespace divbench {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.imbue(std::locale::classic());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_generation_csv(std::ostream& out, std::span<const GenerationRecord> records) {
  out << kGenerationCsvHeader << '\n';
  out << std::fixed << std::setprecision(6);
  for (const auto& r : records) {
    out << r.run_id << ',' << r.generation << ',' << r.raw.min << ',' << r.raw.avg << ','
        << r.raw.max << ',' << r.effective.min << ',' << r.effective.avg << ','
        << r.effective.max << ',' << r.inertia_diversity << ',' << r.period_index << ','
        << r.best_so_far_in_period << '\n';
  }
}

void write_generation_csv(std::span<const GenerationRecord> records,
                          const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_generation_csv(out, records);
  finish(out, path);
}

void write_summary(std::ostream& out, std::span<const AggregateResult> aggregates) {
  if (aggregates.empty()) throw std::invalid_argument("write_summary: no results");
  std::size_t periods = 0;
  for (const auto& a : aggregates) periods = std::max(periods, a.max_achieved_per_period.size());

  out << std::fixed << std::setprecision(6);
  out << "metric";
  for (const auto& a : aggregates) out << ',' << to_string(a.algorithm);
  out << "\nproblem";
  for (const auto& a : aggregates) out << ',' << a.problem;
  out << "\nruns";
  for (const auto& a : aggregates) out << ',' << a.runs;
  out << "\noffline_performance";
  for (const auto& a : aggregates) out << ',' << a.offline_performance;
  for (std::size_t p = 0; p < periods; ++p) {
    out << "\nmax_achieved_fitness_period_" << p + 1;
    for (const auto& a : aggregates) {
      out << ',';
      if (p < a.max_achieved_per_period.size()) {
        out << a.max_achieved_per_period[p];
      } else {
        out << "NA";
      }
    }
  }
  out << "\nfinds_both_peaks_fraction";
  for (const auto& a : aggregates) {
    out << ',';
    if (a.finds_both_peaks_fraction) {
      out << *a.finds_both_peaks_fraction;
    } else {
      out << "NA";
    }
  }
  out << '\n';
}

void write_summary(std::span<const AggregateResult> aggregates,
                   const std::filesystem::path& path) {
  if (aggregates.empty()) throw std::invalid_argument("write_summary: no results");
  auto out = open_for_write(path);
  write_summary(out, aggregates);
  finish(out, path);
}

void write_metadata(const ExperimentConfig& cfg, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "# divbench run metadata\n"
      << "# rng: " << RandomSource::kAlgorithm << '\n'
      << to_config_text(cfg);
  finish(out, path);
}

}  // namespace divbench
