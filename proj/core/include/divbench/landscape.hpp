#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divbench/genome.hpp"
#include "divbench/random.hpp"

namespace divbench {

struct Peak {
  Genome position;
  double height = 0.0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

struct ChangeEvent {
  std::size_t at_generation = 0;
  /// Per-bit flip probability for every peak's position; empty means no movement.
  std::optional<double> move_flip_prob;
  /// peak index -> new height, applied after movement.
  std::map<std::size_t, double> height_updates;
};

enum class LandscapeKind { onemax, twomax, peaks };

std::string_view to_string(LandscapeKind kind);

/// Static fitness function over bitstrings of a fixed length. Dynamic problems
/// are sequences of landscapes produced by apply_change.
class Landscape {
 public:
  static Landscape onemax(std::size_t length);
  static Landscape twomax(std::size_t length);
  /// Throws std::invalid_argument on an empty peak set or mixed lengths.
  static Landscape peaks(std::vector<Peak> peaks);

  LandscapeKind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Peak>& peak_list() const noexcept { return peaks_; }
  std::size_t epoch() const noexcept { return epoch_; }

  /// onemax: ones count. twomax: max(ones, zeros).
  /// peaks: max over peaks of (height - hamming distance); may be negative.
  double evaluate(const Genome& x) const;

  /// Largest attainable fitness.
  double max_fitness() const;
  /// Smallest attainable fitness, computed exactly.
  double min_fitness() const;

  /// Optima used for "both peaks found" checks: the peak positions, or
  /// all-zeros and all-ones for twomax. Empty for onemax.
  std::vector<Genome> reference_optima() const;

  friend bool operator==(const Landscape&, const Landscape&) = default;

 private:
  friend Landscape apply_change(const Landscape&, const ChangeEvent&, RandomSource&);

  LandscapeKind kind_ = LandscapeKind::onemax;
  std::size_t length_ = 0;
  std::vector<Peak> peaks_;
  std::size_t epoch_ = 0;
};

/// XORs the position with a mask whose bits are 1 with flip_prob, drawn in
/// position order.
Peak move_peak(const Peak& peak, double flip_prob, RandomSource& rng);

/// Moves every peak (in index order) if the event has a flip probability,
/// then overwrites heights, then increments the epoch.
Landscape apply_change(const Landscape& landscape, const ChangeEvent& event,
                       RandomSource& rng);

struct ProblemPreset {
  std::string name;
  Landscape initial;
  std::vector<ChangeEvent> schedule;
  std::size_t total_generations = 0;
};

/// Preset identifiers accepted by make_preset.
const std::vector<std::string>& preset_names();

/// Builds a named benchmark problem. Throws NotFoundError for unknown names.
ProblemPreset make_preset(std::string_view name, std::size_t length = 100);

}  // namespace divbench
