#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divbench/random.hpp"

namespace divbench {

/// Fixed-length bitstring stored packed in 64-bit words.
///
/// Bits beyond length() in the last word are always zero, so word-wise
/// comparisons and popcounts need no masking.
class Genome {
 public:
  Genome() = default;

  /// All-zero genome of the given length.
  explicit Genome(std::size_t length);

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
  /// any other character.
  static Genome from_string(std::string_view bits);

  static Genome zeros(std::size_t length) { return Genome(length); }
  static Genome ones(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value) noexcept;
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return length_ - count_ones(); }

  Genome complement() const;
  Genome operator^(const Genome& mask) const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  void clear_tail() noexcept;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Number of positions at which a and b differ. Throws std::invalid_argument
/// on length mismatch.
std::size_t hamming_distance(const Genome& a, const Genome& b);

/// Each bit is 1 with probability 0.5, drawn in position order.
Genome random_genome(std::size_t length, RandomSource& rng);

struct GenomeHash {
  std::size_t operator()(const Genome& g) const noexcept;
};

/// A genome with its landscape fitness and the mechanism-adjusted fitness used
/// for selection. raw_fitness is empty until the individual is evaluated.
struct Individual {
  Genome genome;
  std::optional<double> raw_fitness;
  double effective_fitness = 0.0;

  Individual() = default;
  explicit Individual(Genome g) : genome(std::move(g)) {}
  Individual(Genome g, double raw)
      : genome(std::move(g)), raw_fitness(raw), effective_fitness(raw) {}

  bool evaluated() const noexcept { return raw_fitness.has_value(); }
  /// Throws InvalidStateError when the individual has not been evaluated.
  double raw() const;
};

using Population = std::vector<Individual>;

/// Throws std::invalid_argument unless pop is non-empty and every genome has
/// the same length.
void check_population(const Population& pop, std::string_view what = "population");

}  // namespace divbench
