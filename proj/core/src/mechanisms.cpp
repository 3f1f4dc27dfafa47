#include "divbench/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "divbench/errors.hpp"

namespace divbench {

namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithmNames[] = {
    {Algorithm::basic, "basic"},       {Algorithm::sharing, "sharing"},
    {Algorithm::clearing, "clearing"}, {Algorithm::crowding, "crowding"},
    {Algorithm::incest, "incest"},     {Algorithm::unique, "unique"},
    {Algorithm::islands, "islands"},   {Algorithm::hybrid, "hybrid"},
};

void require_evaluated(const Population& pop) {
  for (const auto& ind : pop) {
    if (!ind.evaluated()) throw InvalidStateError("population contains unevaluated members");
  }
}

// Parents plus freshly evaluated offspring, with effective fitness reset to raw.
Population evaluated_union(const Population& pop, const StepContext& ctx,
                           const MateSelector& select_mates = uniform_mates) {
  check_population(pop);
  require_evaluated(pop);
  Population offspring;
  if (ctx.lambda > 0) {
    offspring = generate_offspring(pop, ctx.lambda, ctx.variation, ctx.rng, select_mates);
    evaluate(offspring, ctx.landscape);
  }
  Population all;
  all.reserve(pop.size() + offspring.size());
  all.insert(all.end(), pop.begin(), pop.end());
  for (auto& ind : all) ind.effective_fitness = ind.raw();
  std::move(offspring.begin(), offspring.end(), std::back_inserter(all));
  return all;
}

// Indices ordered by effective fitness, best first; ties keep input order.
std::vector<std::size_t> rank_by_effective(const Population& pop) {
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pop[a].effective_fitness > pop[b].effective_fitness;
  });
  return idx;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kAlgorithmNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kAlgorithmNames) {
    if (n == name) return a;
  }
  throw NotFoundError("unknown algorithm '" + std::string(name) + "'");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& entry : kAlgorithmNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

void MechanismConfig::validate(Algorithm algorithm, std::size_t genome_length,
                               std::size_t mu, std::size_t lambda) const {
  if (sharing_radius < 1) throw ConfigError("sharing_radius", "must be >= 1");
  if (!(sharing_alpha > 0.0)) throw ConfigError("sharing_alpha", "must be positive");
  if (clearing_radius < 1) throw ConfigError("clearing_radius", "must be >= 1");
  if (niche_cap < 1) throw ConfigError("niche_cap", "must be >= 1");
  // Radii only have to fit the genome for the mechanisms that use them.
  if (algorithm == Algorithm::sharing && sharing_radius > genome_length) {
    throw ConfigError("sharing_radius", "must not exceed genome_length");
  }
  if ((algorithm == Algorithm::clearing || algorithm == Algorithm::hybrid) &&
      clearing_radius > genome_length) {
    throw ConfigError("clearing_radius", "must not exceed genome_length");
  }
  if (incest_threshold_decrement < 1) {
    throw ConfigError("incest_threshold_decrement", "must be >= 1");
  }
  if (island_count < 1) throw ConfigError("island_count", "must be >= 1");
  if (migration_interval < 1) throw ConfigError("migration_interval", "must be >= 1");
  if (emigrants_per_island < 1) throw ConfigError("emigrants_per_island", "must be >= 1");

  if (algorithm == Algorithm::crowding) {
    if (mu < 2 || mu % 2 != 0) throw ConfigError("mu", "crowding needs an even mu >= 2");
    if (lambda % 2 != 0) throw ConfigError("lambda", "crowding needs an even lambda");
  }
  if (algorithm == Algorithm::islands) {
    if (mu % island_count != 0) throw ConfigError("island_count", "must divide mu");
    if (lambda % island_count != 0) throw ConfigError("island_count", "must divide lambda");
    if (emigrants_per_island >= mu / island_count) {
      throw ConfigError("emigrants_per_island", "must be smaller than the island size");
    }
  }
}

void evaluate(Population& pop, const Landscape& landscape) {
  for (auto& ind : pop) {
    const double f = landscape.evaluate(ind.genome);
    ind.raw_fitness = f;
    ind.effective_fitness = f;
  }
}

double sharing_kernel(std::size_t distance, std::size_t radius, double alpha) {
  if (radius == 0) throw std::invalid_argument("sharing radius must be positive");
  if (distance > radius) return 0.0;
  return 1.0 - std::pow(static_cast<double>(distance) / static_cast<double>(radius), alpha);
}

void sharing_adjust(Population& group, std::size_t radius, double alpha) {
  if (radius == 0) throw std::invalid_argument("sharing radius must be positive");
  const std::size_t n = group.size();
  std::vector<double> niche_count(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    niche_count[i] += 1.0;  // sh(0) for the member itself
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sh =
          sharing_kernel(hamming_distance(group[i].genome, group[j].genome), radius, alpha);
      niche_count[i] += sh;
      niche_count[j] += sh;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    group[i].effective_fitness = group[i].raw() / niche_count[i];
  }
}

void clearing_adjust(Population& group, std::size_t radius, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("niche cap must be >= 1");
  std::vector<std::size_t> order(group.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return group[a].raw() > group[b].raw();
  });

  std::vector<double> fitness(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) fitness[i] = group[i].raw();

  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t centre = order[a];
    if (!(fitness[centre] > 0.0)) continue;
    std::size_t winners = 1;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const std::size_t other = order[b];
      if (fitness[other] > 0.0 &&
          hamming_distance(group[centre].genome, group[other].genome) < radius) {
        if (winners < cap) {
          ++winners;
        } else {
          fitness[other] = 0.0;
        }
      }
    }
  }
  for (std::size_t i = 0; i < group.size(); ++i) group[i].effective_fitness = fitness[i];
}

Population basic_step(const Population& pop, const StepContext& ctx) {
  const Population all = evaluated_union(pop, ctx);
  return tournament_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

Population sharing_step(const Population& pop, const StepContext& ctx) {
  Population all = evaluated_union(pop, ctx);
  sharing_adjust(all, ctx.mechanism.sharing_radius, ctx.mechanism.sharing_alpha);
  return tournament_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

Population clearing_step(const Population& pop, const StepContext& ctx) {
  Population all = evaluated_union(pop, ctx);
  clearing_adjust(all, ctx.mechanism.clearing_radius, ctx.mechanism.niche_cap);
  return tournament_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

CrowdingDecision crowding_compete(const Individual& p1, const Individual& p2,
                                  const Individual& c1, const Individual& c2) {
  const std::size_t direct =
      hamming_distance(p1.genome, c1.genome) + hamming_distance(p2.genome, c2.genome);
  const std::size_t crossed =
      hamming_distance(p1.genome, c2.genome) + hamming_distance(p2.genome, c1.genome);
  CrowdingDecision d;
  d.direct_pairing = direct <= crossed;
  if (d.direct_pairing) {
    d.first_replaced = c1.raw() > p1.raw();
    d.second_replaced = c2.raw() > p2.raw();
  } else {
    d.first_replaced = c2.raw() > p1.raw();
    d.second_replaced = c1.raw() > p2.raw();
  }
  return d;
}

Population crowding_step(const Population& pop, const StepContext& ctx) {
  check_population(pop);
  require_evaluated(pop);
  if (ctx.lambda % 2 != 0) throw std::invalid_argument("crowding: lambda must be even");
  if (pop.size() % 2 != 0) throw std::invalid_argument("crowding: mu must be even");
  ctx.variation.validate();

  const std::size_t mu = pop.size();
  const double flip = ctx.variation.flip_prob_for(pop.front().genome.length());

  std::vector<std::size_t> perm(mu);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = mu - 1; i > 0; --i) std::swap(perm[i], perm[ctx.rng.uniform_index(i + 1)]);

  Population next = pop;
  for (std::size_t k = 0; k + 1 < mu; k += 2) {
    const std::size_t a = perm[k];
    const std::size_t b = perm[k + 1];
    auto [g1, g2] = two_point_crossover(pop[a].genome, pop[b].genome, ctx.rng);
    if (ctx.rng.bernoulli(ctx.variation.p_mutation)) g1 = bit_flip_mutation(g1, flip, ctx.rng);
    if (ctx.rng.bernoulli(ctx.variation.p_mutation)) g2 = bit_flip_mutation(g2, flip, ctx.rng);
    const double f1 = ctx.landscape.evaluate(g1);
    const double f2 = ctx.landscape.evaluate(g2);
    Individual c1(std::move(g1), f1);
    Individual c2(std::move(g2), f2);

    const auto d = crowding_compete(pop[a], pop[b], c1, c2);
    if (d.direct_pairing) {
      if (d.first_replaced) next[a] = c1;
      if (d.second_replaced) next[b] = c2;
    } else {
      if (d.first_replaced) next[a] = c2;
      if (d.second_replaced) next[b] = c1;
    }
  }
  for (auto& ind : next) ind.effective_fitness = ind.raw();
  return next;
}

std::pair<std::size_t, std::size_t> incest_pair_select(const Population& pop,
                                                       IncestState& state,
                                                       RandomSource& rng) {
  if (pop.size() < 2) throw InvalidStateError("incest prevention needs at least 2 members");
  const std::size_t first = rng.uniform_index(pop.size());
  std::vector<std::size_t> suitable;
  for (std::size_t j = 0; j < pop.size(); ++j) {
    if (j != first && hamming_distance(pop[first].genome, pop[j].genome) >= state.threshold) {
      suitable.push_back(j);
    }
  }
  if (!suitable.empty()) return {first, suitable[rng.uniform_index(suitable.size())]};

  std::size_t partner = rng.uniform_index(pop.size() - 1);
  if (partner >= first) ++partner;
  state.threshold = state.threshold > state.decrement ? state.threshold - state.decrement : 0;
  return {first, partner};
}

Population incest_step(const Population& pop, const StepContext& ctx, IncestState& state) {
  const MateSelector select = [&state](const Population& p, RandomSource& rng) {
    return incest_pair_select(p, state, rng);
  };
  const Population all = evaluated_union(pop, ctx, select);
  return tournament_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

Population unique_select(const Population& pool, std::size_t mu, std::size_t tournament_size,
                         RandomSource& rng) {
  if (pool.empty()) throw std::invalid_argument("unique_select: empty pool");
  if (tournament_size < 1) throw std::invalid_argument("tournament size must be >= 1");

  Population candidates;
  std::unordered_set<Genome, GenomeHash> seen;
  for (const auto& ind : pool) {
    if (seen.insert(ind.genome).second) candidates.push_back(ind);
  }

  if (candidates.size() < mu) {
    Population out = candidates;
    auto fill = tournament_select(pool, mu - candidates.size(), tournament_size, rng);
    std::move(fill.begin(), fill.end(), std::back_inserter(out));
    return out;
  }

  Population out;
  out.reserve(mu);
  while (out.size() < mu) {
    const auto winner = tournament_indices(candidates, 1, tournament_size, rng).front();
    out.push_back(std::move(candidates[winner]));
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(winner));
  }
  return out;
}

Population unique_step(const Population& pop, const StepContext& ctx) {
  const Population all = evaluated_union(pop, ctx);
  return unique_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

void ring_migrate(std::vector<Population>& islands, std::size_t emigrants) {
  if (islands.empty()) throw std::invalid_argument("ring_migrate: no islands");
  for (const auto& island : islands) {
    if (emigrants >= island.size()) {
      throw std::invalid_argument("ring_migrate: emigrants must be fewer than island members");
    }
  }
  if (islands.size() == 1) return;

  std::vector<Population> outgoing(islands.size());
  for (std::size_t i = 0; i < islands.size(); ++i) {
    const auto ranked = rank_by_effective(islands[i]);
    for (std::size_t e = 0; e < emigrants; ++e) outgoing[i].push_back(islands[i][ranked[e]]);
  }
  for (std::size_t i = 0; i < islands.size(); ++i) {
    auto& target = islands[(i + 1) % islands.size()];
    const auto ranked = rank_by_effective(target);
    for (std::size_t e = 0; e < emigrants; ++e) {
      target[ranked[ranked.size() - 1 - e]] = outgoing[i][e];
    }
  }
}

std::vector<Population> island_step(const std::vector<Population>& islands,
                                    const StepContext& ctx, std::size_t generation) {
  if (islands.empty()) throw std::invalid_argument("island_step: no islands");
  if (ctx.lambda % islands.size() != 0) {
    throw std::invalid_argument("island_step: island count must divide lambda");
  }
  const StepContext local{ctx.landscape, ctx.lambda / islands.size(), ctx.variation,
                          ctx.mechanism, ctx.rng};
  std::vector<Population> next;
  next.reserve(islands.size());
  for (const auto& island : islands) next.push_back(basic_step(island, local));
  if (generation % ctx.mechanism.migration_interval == 0) {
    ring_migrate(next, ctx.mechanism.emigrants_per_island);
  }
  return next;
}

Population hybrid_step(const Population& pop, const StepContext& ctx) {
  Population all = evaluated_union(pop, ctx);
  clearing_adjust(all, ctx.mechanism.clearing_radius, ctx.mechanism.niche_cap);
  return unique_select(all, pop.size(), ctx.variation.tournament_size, ctx.rng);
}

Evolution::Evolution(Algorithm algorithm, std::size_t mu, std::size_t genome_length,
                     VariationConfig variation, MechanismConfig mechanism,
                     const Landscape& landscape, RandomSource& rng)
    : algorithm_(algorithm),
      variation_(std::move(variation)),
      mechanism_(mechanism),
      incest_{mechanism.incest_threshold_initial, mechanism.incest_threshold_decrement} {
  if (mu == 0) throw std::invalid_argument("mu must be >= 1");
  if (genome_length != landscape.length()) {
    throw std::invalid_argument("genome length does not match the landscape");
  }
  variation_.validate();
  // lambda is checked by the steps themselves; 0 passes every lambda rule.
  mechanism_.validate(algorithm, genome_length, mu, 0);

  Population all;
  all.reserve(mu);
  for (std::size_t i = 0; i < mu; ++i) all.emplace_back(random_genome(genome_length, rng));
  evaluate(all, landscape);

  const std::size_t count = algorithm == Algorithm::islands ? mechanism_.island_count : 1;
  const std::size_t block = mu / count;
  for (std::size_t i = 0; i < count; ++i) {
    islands_.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(i * block),
                          all.begin() + static_cast<std::ptrdiff_t>((i + 1) * block));
  }
}

void Evolution::reevaluate(const Landscape& landscape) {
  for (auto& island : islands_) evaluate(island, landscape);
}

void Evolution::step(const Landscape& landscape, std::size_t lambda, std::size_t generation,
                     RandomSource& rng) {
  const StepContext ctx{landscape, lambda, variation_, mechanism_, rng};
  auto& pop = islands_.front();
  switch (algorithm_) {
    case Algorithm::basic: pop = basic_step(pop, ctx); break;
    case Algorithm::sharing: pop = sharing_step(pop, ctx); break;
    case Algorithm::clearing: pop = clearing_step(pop, ctx); break;
    case Algorithm::crowding: pop = crowding_step(pop, ctx); break;
    case Algorithm::incest: pop = incest_step(pop, ctx, incest_); break;
    case Algorithm::unique: pop = unique_step(pop, ctx); break;
    case Algorithm::islands: islands_ = island_step(islands_, ctx, generation); break;
    case Algorithm::hybrid: pop = hybrid_step(pop, ctx); break;
  }
}

Population Evolution::population() const {
  Population all;
  for (const auto& island : islands_) all.insert(all.end(), island.begin(), island.end());
  return all;
}

}  // namespace divbench
