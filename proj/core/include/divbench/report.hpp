#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "divbench/config.hpp"
#include "divbench/harness.hpp"
#include "divbench/metrics.hpp"

namespace divbench {

inline constexpr std::string_view kGenerationCsvHeader =
    "run,generation,min_raw,avg_raw,max_raw,min_eff,avg_eff,max_eff,"
    "inertia_diversity,period,best_so_far";

/// Header plus one row per record; reals with 6 decimals.
void write_generation_csv(std::ostream& out, std::span<const GenerationRecord> records);
/// Throws IoError naming the path.
void write_generation_csv(std::span<const GenerationRecord> records,
                          const std::filesystem::path& path);

/// Table with one column per aggregate (in the given order) and rows for
/// offline performance, max achieved fitness per period, and the fraction of
/// runs finding both peaks.
void write_summary(std::ostream& out, std::span<const AggregateResult> aggregates);
/// Throws std::invalid_argument on an empty span, IoError on file failure.
void write_summary(std::span<const AggregateResult> aggregates,
                   const std::filesystem::path& path);

/// The effective config plus the random generator description.
void write_metadata(const ExperimentConfig& cfg, const std::filesystem::path& path);

}  // namespace divbench
