#include "divbench/variation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "divbench/errors.hpp"

namespace divbench {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void VariationConfig::validate() const {
  if (!is_probability(p_crossover)) throw ConfigError("p_crossover", "must lie in [0, 1]");
  if (!is_probability(p_mutation)) throw ConfigError("p_mutation", "must lie in [0, 1]");
  if (p_crossover + p_mutation > 1.0 + 1e-12) {
    throw ConfigError("p_mutation", "p_crossover + p_mutation must not exceed 1");
  }
  if (per_bit_flip_prob && !is_probability(*per_bit_flip_prob)) {
    throw ConfigError("per_bit_flip_prob", "must lie in [0, 1]");
  }
  if (tournament_size < 1) throw ConfigError("tournament_size", "must be >= 1");
}

std::pair<Genome, Genome> two_point_crossover_at(const Genome& p1, const Genome& p2,
                                                 std::size_t first_cut,
                                                 std::size_t second_cut) {
  if (p1.length() != p2.length()) {
    throw std::invalid_argument("crossover: parent lengths differ");
  }
  if (first_cut > second_cut || second_cut > p1.length()) {
    throw std::invalid_argument("crossover: cuts must satisfy first <= second <= length");
  }
  Genome c1 = p1;
  Genome c2 = p2;
  for (std::size_t i = first_cut; i < second_cut; ++i) {
    c1.set(i, p2[i]);
    c2.set(i, p1[i]);
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Genome, Genome> two_point_crossover(const Genome& p1, const Genome& p2,
                                              RandomSource& rng) {
  if (p1.length() != p2.length()) {
    throw std::invalid_argument("crossover: parent lengths differ");
  }
  const std::size_t n = p1.length();
  if (n < 2) throw std::invalid_argument("crossover: genomes need at least 2 bits");
  std::size_t a = rng.uniform_index(n + 1);
  std::size_t b = rng.uniform_index(n);
  if (b >= a) ++b;
  if (a > b) std::swap(a, b);
  return two_point_crossover_at(p1, p2, a, b);
}

Genome bit_flip_mutation(const Genome& g, double per_bit_flip_prob, RandomSource& rng) {
  if (!is_probability(per_bit_flip_prob)) {
    throw std::invalid_argument("mutation: flip probability must lie in [0, 1]");
  }
  Genome out = g;
  for (std::size_t i = 0; i < out.length(); ++i) {
    if (rng.bernoulli(per_bit_flip_prob)) out.flip(i);
  }
  return out;
}

std::vector<std::size_t> tournament_indices(const Population& pop, std::size_t count,
                                            std::size_t tournament_size,
                                            RandomSource& rng) {
  if (pop.empty()) throw InvalidStateError("tournament selection on an empty population");
  if (tournament_size < 1) throw std::invalid_argument("tournament size must be >= 1");
  std::vector<std::size_t> winners;
  winners.reserve(count);
  for (std::size_t slot = 0; slot < count; ++slot) {
    std::size_t best = rng.uniform_index(pop.size());
    for (std::size_t t = 1; t < tournament_size; ++t) {
      const std::size_t challenger = rng.uniform_index(pop.size());
      if (pop[challenger].effective_fitness > pop[best].effective_fitness) best = challenger;
    }
    winners.push_back(best);
  }
  return winners;
}

Population tournament_select(const Population& pop, std::size_t count,
                             std::size_t tournament_size, RandomSource& rng) {
  Population out;
  out.reserve(count);
  for (auto idx : tournament_indices(pop, count, tournament_size, rng)) {
    out.push_back(pop[idx]);
  }
  return out;
}

std::pair<std::size_t, std::size_t> uniform_mates(const Population& pop, RandomSource& rng) {
  const std::size_t a = rng.uniform_index(pop.size());
  const std::size_t b = rng.uniform_index(pop.size());
  return {a, b};
}

Population generate_offspring(const Population& pop, std::size_t lambda,
                              const VariationConfig& cfg, RandomSource& rng,
                              const MateSelector& select_mates, OffspringTally* tally) {
  cfg.validate();
  if (pop.empty()) throw InvalidStateError("offspring generation from an empty population");
  if (pop.size() < 2 && cfg.p_crossover > 0.0) {
    throw InvalidStateError("crossover needs a population of at least 2");
  }
  const double flip = cfg.flip_prob_for(pop.front().genome.length());

  Population offspring;
  offspring.reserve(lambda);
  while (offspring.size() < lambda) {
    const double r = rng.uniform01();
    if (r < cfg.p_crossover) {
      const auto [a, b] = select_mates(pop, rng);
      auto children = two_point_crossover(pop[a].genome, pop[b].genome, rng);
      offspring.emplace_back(std::move(children.first));
      if (tally) ++tally->crossover;
    } else if (r < cfg.p_crossover + cfg.p_mutation) {
      const std::size_t parent = rng.uniform_index(pop.size());
      offspring.emplace_back(bit_flip_mutation(pop[parent].genome, flip, rng));
      if (tally) ++tally->mutation;
    } else {
      offspring.emplace_back(pop[rng.uniform_index(pop.size())].genome);
      if (tally) ++tally->copy;
    }
  }
  return offspring;
}

}  // namespace divbench
