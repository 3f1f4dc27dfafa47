#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "divbench/errors.hpp"
#include "divbench/variation.hpp"
#include "support.hpp"

using namespace divbench;
using divbench::test::ind;

TEST(Crossover, IdenticalParentsGiveClones) {
  RandomSource r(1, 0);
  const auto p = Genome::from_string("1011001110");
  for (int i = 0; i < 50; ++i) {
    auto [c1, c2] = two_point_crossover(p, p, r);
    ASSERT_EQ(c1, p);
    ASSERT_EQ(c2, p);
  }
}

TEST(Crossover, HandTracedSegmentExchange) {
  auto [c1, c2] =
      two_point_crossover_at(Genome::from_string("000000"), Genome::from_string("111111"), 2, 4);
  EXPECT_EQ(c1.to_string(), "001100");
  EXPECT_EQ(c2.to_string(), "110011");
}

TEST(Crossover, FullWindowSwapsParents) {
  const auto a = Genome::from_string("1100101");
  const auto b = Genome::from_string("0011100");
  auto [c1, c2] = two_point_crossover_at(a, b, 0, a.length());
  EXPECT_EQ(c1, b);
  EXPECT_EQ(c2, a);
}

TEST(Crossover, Errors) {
  RandomSource r(1, 0);
  EXPECT_THROW(two_point_crossover(Genome(3), Genome(4), r), std::invalid_argument);
  EXPECT_THROW(two_point_crossover(Genome(1), Genome(1), r), std::invalid_argument);
  EXPECT_THROW(two_point_crossover_at(Genome(4), Genome(4), 3, 2), std::invalid_argument);
  EXPECT_THROW(two_point_crossover_at(Genome(4), Genome(4), 1, 5), std::invalid_argument);
}

TEST(Crossover, CutsAreDistinct) {
  // With complementary parents a zero-width window would return the parents.
  RandomSource r(5, 0);
  const auto a = Genome::zeros(2);
  const auto b = Genome::ones(2);
  for (int i = 0; i < 200; ++i) {
    auto [c1, c2] = two_point_crossover(a, b, r);
    ASSERT_NE(c1, a);
    ASSERT_NE(c2, b);
  }
}

TEST(Mutation, ProbabilityZeroIsIdentity) {
  RandomSource r(1, 0);
  const auto g = Genome::from_string("10110");
  EXPECT_EQ(bit_flip_mutation(g, 0.0, r), g);
}

TEST(Mutation, ProbabilityOneComplements) {
  RandomSource r(1, 0);
  const auto g = Genome::from_string("10110");
  EXPECT_EQ(bit_flip_mutation(g, 1.0, r), g.complement());
}

TEST(Mutation, MeanFlipCount) {
  RandomSource r(77, 0);
  const auto g = Genome::zeros(100);
  double flips = 0.0;
  for (int i = 0; i < 10000; ++i) flips += static_cast<double>(bit_flip_mutation(g, 0.01, r).count_ones());
  EXPECT_NEAR(flips / 10000.0, 1.0, 0.05);
}

TEST(Tournament, SizeOneIsUniform) {
  RandomSource r(4, 0);
  Population pop{ind("00", 1), ind("01", 2), ind("10", 3), ind("11", 4)};
  std::map<std::size_t, int> counts;
  for (auto i : tournament_indices(pop, 40000, 1, r)) ++counts[i];
  ASSERT_EQ(counts.size(), 4U);
  for (const auto& [i, c] : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(Tournament, LargeTournamentPicksBest) {
  RandomSource r(8, 0);
  Population pop;
  for (int i = 0; i < 10; ++i) pop.push_back(ind("0101", i));
  int best = 0;
  const auto winners = tournament_indices(pop, 1000, 100, r);
  for (auto i : winners) best += i == 9 ? 1 : 0;
  EXPECT_GE(best, 990);
}

TEST(Tournament, MaxRule) {
  // Replays the draws on a twin stream: each winner is the first drawn member
  // with the highest fitness among its three draws.
  RandomSource r(3, 0);
  RandomSource twin(3, 0);
  Population pop{ind("00", 3), ind("01", 7), ind("10", 7)};
  const auto winners = tournament_indices(pop, 200, 3, r);
  bool saw_mixed = false;
  for (auto w : winners) {
    std::size_t best = twin.uniform_index(3);
    std::set<double> drawn{pop[best].effective_fitness};
    for (int k = 1; k < 3; ++k) {
      const auto c = twin.uniform_index(3);
      drawn.insert(pop[c].effective_fitness);
      if (pop[c].effective_fitness > pop[best].effective_fitness) best = c;
    }
    ASSERT_EQ(w, best);
    if (drawn.size() == 2) {
      saw_mixed = true;
      EXPECT_DOUBLE_EQ(pop[w].effective_fitness, 7.0);
    }
  }
  EXPECT_TRUE(saw_mixed);
}

TEST(Tournament, UsesEffectiveFitness) {
  RandomSource r(3, 0);
  Population pop{ind("00", 10), ind("11", 1)};
  pop[0].effective_fitness = 0.0;
  for (const auto& w : tournament_select(pop, 100, 50, r)) EXPECT_EQ(w.genome.to_string(), "11");
}

TEST(Tournament, EmptyPopulationThrows) {
  RandomSource r(3, 0);
  EXPECT_THROW(tournament_indices({}, 1, 3, r), InvalidStateError);
}

TEST(Offspring, CopiesOnlyPath) {
  RandomSource r(1, 0);
  Population pop{ind("0011", 2), ind("1100", 2), ind("1010", 2)};
  VariationConfig cfg;
  cfg.p_crossover = 0.0;
  cfg.p_mutation = 1.0;
  cfg.per_bit_flip_prob = 0.0;
  const auto kids = generate_offspring(pop, 25, cfg, r);
  ASSERT_EQ(kids.size(), 25U);
  for (const auto& k : kids) {
    EXPECT_FALSE(k.evaluated());
    EXPECT_TRUE(std::any_of(pop.begin(), pop.end(),
                            [&](const Individual& p) { return p.genome == k.genome; }));
  }
}

TEST(Offspring, CrossoverOfClones) {
  RandomSource r(1, 0);
  Population pop{ind("01101", 3), ind("01101", 3)};
  VariationConfig cfg;
  cfg.p_crossover = 1.0;
  cfg.p_mutation = 0.0;
  for (const auto& k : generate_offspring(pop, 10, cfg, r)) EXPECT_EQ(k.genome.to_string(), "01101");
}

TEST(Offspring, BranchFractions) {
  RandomSource r(99, 0);
  RandomSource init(98, 0);
  auto pop = divbench::test::random_population(20, 30, init);
  VariationConfig cfg;
  OffspringTally tally;
  const auto kids = generate_offspring(pop, 10000, cfg, r, uniform_mates, &tally);
  EXPECT_EQ(kids.size(), 10000U);
  EXPECT_EQ(tally.crossover + tally.mutation + tally.copy, 10000U);
  EXPECT_NEAR(tally.crossover / 10000.0, 0.65, 0.015);
  EXPECT_NEAR(tally.mutation / 10000.0, 0.35, 0.015);
}

TEST(Offspring, CrossoverNeedsTwoMembers) {
  RandomSource r(1, 0);
  Population pop{ind("0101", 1)};
  EXPECT_THROW(generate_offspring(pop, 3, VariationConfig{}, r), InvalidStateError);
}

TEST(Offspring, ZeroLambda) {
  RandomSource r(1, 0);
  Population pop{ind("0101", 1), ind("1111", 1)};
  EXPECT_TRUE(generate_offspring(pop, 0, VariationConfig{}, r).empty());
}

TEST(VariationConfig, Validation) {
  VariationConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_DOUBLE_EQ(c.flip_prob_for(100), 0.01);
  c.p_crossover = 0.8;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.p_mutation = -0.1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.per_bit_flip_prob = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.tournament_size = 0;
  try {
    c.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "tournament_size");
  }
}
