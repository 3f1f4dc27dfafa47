#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divbench/genome.hpp"
#include "divbench/landscape.hpp"
#include "divbench/random.hpp"
#include "divbench/variation.hpp"

namespace divbench {

enum class Algorithm { basic, sharing, clearing, crowding, incest, unique, islands, hybrid };

std::string_view to_string(Algorithm algorithm);
/// Throws NotFoundError for unknown names.
Algorithm parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

struct MechanismConfig {
  std::size_t sharing_radius = 25;
  double sharing_alpha = 1.0;
  std::size_t clearing_radius = 50;
  std::size_t niche_cap = 10;
  std::size_t incest_threshold_initial = 50;
  std::size_t incest_threshold_decrement = 1;
  std::size_t island_count = 5;
  std::size_t migration_interval = 20;
  std::size_t emigrants_per_island = 3;

  /// Checks the fields `algorithm` uses against the run shape. Throws
  /// ConfigError naming the field.
  void validate(Algorithm algorithm, std::size_t genome_length, std::size_t mu,
                std::size_t lambda) const;
};

/// Everything a generation step reads besides the population itself.
struct StepContext {
  const Landscape& landscape;
  std::size_t lambda;
  const VariationConfig& variation;
  const MechanismConfig& mechanism;
  RandomSource& rng;
};

/// Sets raw fitness from the landscape and resets effective fitness to raw.
void evaluate(Population& pop, const Landscape& landscape);

// Fitness adjustment. Both operate in place on an evaluated group.

/// sh(d) = 1 - (d / radius)^alpha for d <= radius, else 0.
double sharing_kernel(std::size_t distance, std::size_t radius, double alpha);

/// effective = raw / sum_j sh(d(i, j)), where the sum includes i itself.
void sharing_adjust(Population& group, std::size_t radius, double alpha);

/// Clearing on a copy sorted by raw fitness (descending, stable): each
/// surviving member with fitness > 0 opens a niche; later members within
/// distance < radius keep their fitness while fewer than `cap` winners have
/// been counted, otherwise their effective fitness becomes 0. Members with
/// raw fitness <= 0 are never niche winners and keep their raw value.
void clearing_adjust(Population& group, std::size_t radius, std::size_t cap);

// Per-generation steps. Each takes an evaluated population of size mu and
// returns the next evaluated population of size mu.

Population basic_step(const Population& pop, const StepContext& ctx);
Population sharing_step(const Population& pop, const StepContext& ctx);
Population clearing_step(const Population& pop, const StepContext& ctx);

/// Outcome of one parent/child competition in deterministic crowding.
struct CrowdingDecision {
  bool direct_pairing = true;   ///< p1 vs c1 and p2 vs c2 (else p1 vs c2, p2 vs c1)
  bool first_replaced = false;  ///< p1's slot taken by its competing child
  bool second_replaced = false;
};

/// Pairs children with parents to minimize total distance (direct pairing on
/// ties) and replaces a parent only when its competitor is strictly fitter.
CrowdingDecision crowding_compete(const Individual& p1, const Individual& p2,
                                  const Individual& c1, const Individual& c2);

/// Deterministic crowding: mu/2 disjoint random parent pairs, each producing
/// two crossover children that are mutated with probability p_mutation each.
/// lambda is not used for the child count but must be even.
Population crowding_step(const Population& pop, const StepContext& ctx);

struct IncestState {
  std::size_t threshold = 50;
  std::size_t decrement = 1;
};

/// First parent uniform; partner uniform among the other members at Hamming
/// distance >= threshold. With no such member the partner is uniform over the
/// others and the threshold drops by `decrement` (not below 0).
std::pair<std::size_t, std::size_t> incest_pair_select(const Population& pop,
                                                       IncestState& state,
                                                       RandomSource& rng);

/// basic_step with incest-restricted mate choice for crossover offspring.
Population incest_step(const Population& pop, const StepContext& ctx, IncestState& state);

/// Removes genotype duplicates (first occurrence kept), then fills mu slots by
/// tournament without re-selecting winners. If fewer than mu unique genomes
/// exist, all are kept and the rest are tournament winners from the full pool.
Population unique_select(const Population& pool, std::size_t mu, std::size_t tournament_size,
                         RandomSource& rng);

Population unique_step(const Population& pop, const StepContext& ctx);

/// Copies the `emigrants` best members of island i over the worst members of
/// island (i + 1) mod count. A single island is left untouched.
void ring_migrate(std::vector<Population>& islands, std::size_t emigrants);

/// basic_step on every island with lambda / island_count offspring, then ring
/// migration when generation % migration_interval == 0.
std::vector<Population> island_step(const std::vector<Population>& islands,
                                    const StepContext& ctx, std::size_t generation);

/// Clearing on the parent+offspring union followed by unique_select on the
/// cleared fitness.
Population hybrid_step(const Population& pop, const StepContext& ctx);

/// Per-run evolutionary state for one algorithm: the population (or islands)
/// plus whatever the mechanism carries between generations.
class Evolution {
 public:
  /// Draws mu random genomes in order and evaluates them. Islands receive
  /// consecutive blocks of mu / island_count genomes.
  Evolution(Algorithm algorithm, std::size_t mu, std::size_t genome_length,
            VariationConfig variation, MechanismConfig mechanism,
            const Landscape& landscape, RandomSource& rng);

  Algorithm algorithm() const noexcept { return algorithm_; }

  /// Re-evaluates every member, e.g. after a landscape change.
  void reevaluate(const Landscape& landscape);

  void step(const Landscape& landscape, std::size_t lambda, std::size_t generation,
            RandomSource& rng);

  /// All members (islands concatenated in island order).
  Population population() const;
  const std::vector<Population>& islands() const noexcept { return islands_; }
  std::size_t incest_threshold() const noexcept { return incest_.threshold; }

 private:
  Algorithm algorithm_;
  VariationConfig variation_;
  MechanismConfig mechanism_;
  std::vector<Population> islands_;  // exactly one entry unless algorithm is islands
  IncestState incest_;
};

}  // namespace divbench
