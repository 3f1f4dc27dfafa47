#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "divbench/genome.hpp"
#include "divbench/random.hpp"

namespace divbench {

struct VariationConfig {
  double p_crossover = 0.65;
  double p_mutation = 0.35;
  /// Per-bit flip probability for mutation; empty means 1 / genome length.
  std::optional<double> per_bit_flip_prob;
  std::size_t tournament_size = 3;

  double flip_prob_for(std::size_t length) const {
    return per_bit_flip_prob.value_or(1.0 / static_cast<double>(length));
  }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Exchanges bits [first_cut, second_cut) between copies of p1 and p2.
std::pair<Genome, Genome> two_point_crossover_at(const Genome& p1, const Genome& p2,
                                                 std::size_t first_cut,
                                                 std::size_t second_cut);

/// Draws two distinct cut points in [0, length], sorts them, and exchanges the
/// window. Requires equal lengths >= 2.
std::pair<Genome, Genome> two_point_crossover(const Genome& p1, const Genome& p2,
                                              RandomSource& rng);

/// Flips each bit independently with per_bit_flip_prob, one draw per position.
Genome bit_flip_mutation(const Genome& g, double per_bit_flip_prob, RandomSource& rng);

/// Indices of `count` tournament winners. Each tournament draws
/// `tournament_size` members uniformly with replacement and keeps the one with
/// the highest effective fitness; the earliest draw wins ties.
std::vector<std::size_t> tournament_indices(const Population& pop, std::size_t count,
                                            std::size_t tournament_size,
                                            RandomSource& rng);

Population tournament_select(const Population& pop, std::size_t count,
                             std::size_t tournament_size, RandomSource& rng);

/// Picks the two crossover parents (as population indices).
using MateSelector =
    std::function<std::pair<std::size_t, std::size_t>(const Population&, RandomSource&)>;

/// Two independent uniform draws; the same member may be drawn twice.
std::pair<std::size_t, std::size_t> uniform_mates(const Population& pop, RandomSource& rng);

struct OffspringTally {
  std::size_t crossover = 0;
  std::size_t mutation = 0;
  std::size_t copy = 0;
};

/// Creates exactly lambda unevaluated offspring. For each one a uniform r is
/// drawn: r < p_crossover gives the first child of a two-point crossover,
/// r < p_crossover + p_mutation a bit-flip mutant of a uniform parent, and
/// anything else a copy of a uniform member.
Population generate_offspring(const Population& pop, std::size_t lambda,
                              const VariationConfig& cfg, RandomSource& rng,
                              const MateSelector& select_mates = uniform_mates,
                              OffspringTally* tally = nullptr);

}  // namespace divbench
