#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "divbench/mechanisms.hpp"
#include "divbench/variation.hpp"

namespace divbench {

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::basic;
  std::string problem = "onemax";
  std::size_t mu = 50;
  std::size_t lambda = 30;
  std::size_t genome_length = 100;
  std::size_t generations = 450;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  VariationConfig variation;
  MechanismConfig mechanism;
  /// Hamming radius for the "finds both peaks" check.
  std::size_t both_peaks_proximity = 10;
  std::filesystem::path output_dir = "results";
  /// Worker threads for replicated runs; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// Applies one `key = value` setting. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Parses flat `key = value` lines; blank lines and `#` comments are ignored.
/// Later keys override earlier ones.
void apply_config_text(ExperimentConfig& cfg, std::istream& in);

/// Reads a config file on top of the defaults. Throws IoError if the file
/// cannot be opened.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every key accepted by apply_setting, in a stable order.
const std::vector<std::string>& config_keys();

/// Renders cfg as `key = value` lines that load_config reads back unchanged.
std::string to_config_text(const ExperimentConfig& cfg);

}  // namespace divbench
