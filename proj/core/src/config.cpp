#include "divbench/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "divbench/errors.hpp"
#include "divbench/landscape.hpp"

namespace divbench {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("runs", "must be >= 1");
  if (generations < 1) throw ConfigError("generations", "must be >= 1");
  if (mu < 1) throw ConfigError("mu", "must be >= 1");
  if (lambda < 1) throw ConfigError("lambda", "must be >= 1");
  if (genome_length < 2) throw ConfigError("genome_length", "must be >= 2");
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), problem) == names.end()) {
    throw ConfigError("problem", "unknown problem '" + problem + "'");
  }
  variation.validate();
  mechanism.validate(algorithm, genome_length, mu, lambda);
  const std::size_t deme = algorithm == Algorithm::islands ? mu / mechanism.island_count : mu;
  if (variation.p_crossover > 0.0 && deme < 2) {
    throw ConfigError("mu", "crossover needs at least 2 members per (sub)population");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "algorithm",        "problem",
      "mu",               "lambda",
      "genome_length",    "generations",
      "runs",             "seed",
      "p_crossover",      "p_mutation",
      "per_bit_flip_prob", "tournament_size",
      "sharing_radius",   "sharing_alpha",
      "clearing_radius",  "niche_cap",
      "incest_threshold_initial", "incest_threshold_decrement",
      "island_count",     "migration_interval",
      "emigrants_per_island", "both_peaks_proximity",
      "output_dir",       "threads"};
  return keys;
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  const auto size = [&] { return parse_number<std::size_t>(key, value); };
  const auto real = [&] { return parse_number<double>(key, value); };

  if (key == "algorithm") {
    try {
      cfg.algorithm = parse_algorithm(value);
    } catch (const NotFoundError& e) {
      throw ConfigError("algorithm", e.what());
    }
  } else if (key == "problem") {
    cfg.problem = std::string(value);
  } else if (key == "mu") {
    cfg.mu = size();
  } else if (key == "lambda") {
    cfg.lambda = size();
  } else if (key == "genome_length") {
    cfg.genome_length = size();
  } else if (key == "generations") {
    cfg.generations = size();
  } else if (key == "runs") {
    cfg.runs = size();
  } else if (key == "seed") {
    cfg.base_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "p_crossover") {
    cfg.variation.p_crossover = real();
  } else if (key == "p_mutation") {
    cfg.variation.p_mutation = real();
  } else if (key == "per_bit_flip_prob") {
    if (value == "auto") {
      cfg.variation.per_bit_flip_prob.reset();
    } else {
      cfg.variation.per_bit_flip_prob = real();
    }
  } else if (key == "tournament_size") {
    cfg.variation.tournament_size = size();
  } else if (key == "sharing_radius") {
    cfg.mechanism.sharing_radius = size();
  } else if (key == "sharing_alpha") {
    cfg.mechanism.sharing_alpha = real();
  } else if (key == "clearing_radius") {
    cfg.mechanism.clearing_radius = size();
  } else if (key == "niche_cap") {
    cfg.mechanism.niche_cap = size();
  } else if (key == "incest_threshold_initial") {
    cfg.mechanism.incest_threshold_initial = size();
  } else if (key == "incest_threshold_decrement") {
    cfg.mechanism.incest_threshold_decrement = size();
  } else if (key == "island_count") {
    cfg.mechanism.island_count = size();
  } else if (key == "migration_interval") {
    cfg.mechanism.migration_interval = size();
  } else if (key == "emigrants_per_island") {
    cfg.mechanism.emigrants_per_island = size();
  } else if (key == "both_peaks_proximity") {
    cfg.both_peaks_proximity = size();
  } else if (key == "output_dir") {
    cfg.output_dir = std::string(value);
  } else if (key == "threads") {
    cfg.threads = size();
  } else {
    throw ConfigError(std::string(key), "unknown config key");
  }
}

void apply_config_text(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    apply_setting(cfg, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  ExperimentConfig cfg;
  apply_config_text(cfg, in);
  return cfg;
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "algorithm = " << to_string(cfg.algorithm) << '\n'
      << "problem = " << cfg.problem << '\n'
      << "mu = " << cfg.mu << '\n'
      << "lambda = " << cfg.lambda << '\n'
      << "genome_length = " << cfg.genome_length << '\n'
      << "generations = " << cfg.generations << '\n'
      << "runs = " << cfg.runs << '\n'
      << "seed = " << cfg.base_seed << '\n'
      << "p_crossover = " << format_double(cfg.variation.p_crossover) << '\n'
      << "p_mutation = " << format_double(cfg.variation.p_mutation) << '\n'
      << "per_bit_flip_prob = "
      << (cfg.variation.per_bit_flip_prob ? format_double(*cfg.variation.per_bit_flip_prob)
                                          : std::string("auto"))
      << '\n'
      << "tournament_size = " << cfg.variation.tournament_size << '\n'
      << "sharing_radius = " << cfg.mechanism.sharing_radius << '\n'
      << "sharing_alpha = " << format_double(cfg.mechanism.sharing_alpha) << '\n'
      << "clearing_radius = " << cfg.mechanism.clearing_radius << '\n'
      << "niche_cap = " << cfg.mechanism.niche_cap << '\n'
      << "incest_threshold_initial = " << cfg.mechanism.incest_threshold_initial << '\n'
      << "incest_threshold_decrement = " << cfg.mechanism.incest_threshold_decrement << '\n'
      << "island_count = " << cfg.mechanism.island_count << '\n'
      << "migration_interval = " << cfg.mechanism.migration_interval << '\n'
      << "emigrants_per_island = " << cfg.mechanism.emigrants_per_island << '\n'
      << "both_peaks_proximity = " << cfg.both_peaks_proximity << '\n'
      << "output_dir = " << cfg.output_dir.string() << '\n'
      << "threads = " << cfg.threads << '\n';
  return out.str();
}

}  // namespace divbench
