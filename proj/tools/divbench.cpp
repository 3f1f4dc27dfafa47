// divbench command line: run one algorithm on a problem, compare several, or
// list the available algorithms and problems.
//
// Exit codes: 0 success, 1 invalid configuration or arguments, 2 I/O failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divbench/config.hpp"
#include "divbench/errors.hpp"
#include "divbench/harness.hpp"
#include "divbench/landscape.hpp"
#include "divbench/report.hpp"

namespace fs = std::filesystem;
using namespace divbench;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct Overrides {
  std::string config_path;
  std::optional<std::string> algorithm;
  std::optional<std::string> problem;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> generations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> threads;
};

void add_common_options(CLI::App& cmd, Overrides& o, bool with_algorithm) {
  cmd.add_option("--config", o.config_path, "key = value config file")->required();
  if (with_algorithm) cmd.add_option("--algorithm", o.algorithm, "mechanism name");
  cmd.add_option("--problem", o.problem, "problem preset name");
  cmd.add_option("--runs", o.runs, "number of seeded runs");
  cmd.add_option("--generations", o.generations, "generations per run");
  cmd.add_option("--seed", o.seed, "base seed");
  cmd.add_option("--out", o.out, "output directory (default $DIVBENCH_OUT or ./results)");
  cmd.add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

ExperimentConfig build_config(const Overrides& o) {
  ExperimentConfig cfg;
  if (const char* env = std::getenv("DIVBENCH_OUT"); env && *env) cfg.output_dir = env;

  std::ifstream in(o.config_path);
  if (!in) throw IoError("cannot open config file " + o.config_path);
  apply_config_text(cfg, in);

  if (o.algorithm) apply_setting(cfg, "algorithm", *o.algorithm);
  if (o.problem) cfg.problem = *o.problem;
  if (o.runs) cfg.runs = *o.runs;
  if (o.generations) cfg.generations = *o.generations;
  if (o.seed) cfg.base_seed = *o.seed;
  if (o.out) cfg.output_dir = *o.out;
  if (o.threads) cfg.threads = *o.threads;
  return cfg;
}

fs::path prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  return dir;
}

AggregateResult run_and_write(const ExperimentConfig& cfg) {
  const auto result = run_replicated(cfg);
  const auto dir = prepare_dir(cfg.output_dir / cfg.problem / std::string(to_string(cfg.algorithm)));

  std::vector<GenerationRecord> rows;
  rows.reserve(cfg.runs * cfg.generations);
  for (const auto& run : result.runs) rows.insert(rows.end(), run.records.begin(), run.records.end());
  write_generation_csv(rows, dir / "generations.csv");
  write_generation_csv(result.aggregate.mean_records, dir / "mean_generations.csv");
  write_summary(std::span(&result.aggregate, 1), dir / "summary.csv");
  write_metadata(cfg, dir / "metadata.txt");
  return result.aggregate;
}

void print_aggregate(const AggregateResult& a) {
  std::cout << to_string(a.algorithm) << " on " << a.problem << " (" << a.runs << " runs)"
            << ": offline " << a.offline_performance << ", max per period";
  for (double m : a.max_achieved_per_period) std::cout << ' ' << m;
  if (a.finds_both_peaks_fraction) std::cout << ", both peaks " << *a.finds_both_peaks_fraction;
  std::cout << '\n';
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diversity mechanisms for evolutionary algorithms on dynamic bitstring problems"};
  app.require_subcommand(1);

  Overrides run_opts;
  auto* run_cmd = app.add_subcommand("run", "run one algorithm on one problem");
  add_common_options(*run_cmd, run_opts, true);

  Overrides cmp_opts;
  std::string algorithms;
  auto* cmp_cmd = app.add_subcommand("compare", "run several algorithms and write one summary");
  add_common_options(*cmp_cmd, cmp_opts, false);
  cmp_cmd->add_option("--algorithms", algorithms, "comma separated mechanism names")->required();

  std::string what;
  auto* list_cmd = app.add_subcommand("list", "list algorithms or problems");
  list_cmd->add_option("what", what, "algorithms | problems")
      ->required()
      ->check(CLI::IsMember({"algorithms", "problems"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*list_cmd) {
      if (what == "algorithms") {
        for (auto a : all_algorithms()) std::cout << to_string(a) << '\n';
      } else {
        for (const auto& p : preset_names()) std::cout << p << '\n';
      }
      return 0;
    }

    if (*run_cmd) {
      const auto cfg = build_config(run_opts);
      cfg.validate();
      print_aggregate(run_and_write(cfg));
      return 0;
    }

    auto base = build_config(cmp_opts);
    const auto names = split_csv(algorithms);
    if (names.empty()) throw ConfigError("algorithms", "no algorithm given");
    std::vector<AggregateResult> results;
    for (const auto& name : names) {
      auto cfg = base;
      apply_setting(cfg, "algorithm", name);
      cfg.validate();
      results.push_back(run_and_write(cfg));
      print_aggregate(results.back());
    }
    const auto dir = prepare_dir(base.output_dir / base.problem);
    write_summary(results, dir / "summary.csv");
    std::cout << "summary written to " << (dir / "summary.csv").string() << '\n';
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NotFoundError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
