#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divbench/genome.hpp"
#include "divbench/random.hpp"

namespace divbench::test {

inline Individual ind(std::string_view bits, double raw) {
  return Individual(Genome::from_string(bits), raw);
}

inline Population random_population(std::size_t size, std::size_t length, RandomSource& rng) {
  Population pop;
  pop.reserve(size);
  for (std::size_t i = 0; i < size; ++i) pop.emplace_back(random_genome(length, rng));
  return pop;
}

inline std::vector<std::string> genome_strings(const Population& pop) {
  std::vector<std::string> out;
  out.reserve(pop.size());
  for (const auto& i : pop) out.push_back(i.genome.to_string());
  return out;
}

}  // namespace divbench::test
