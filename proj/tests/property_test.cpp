#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "divbench/harness.hpp"
#include "divbench/landscape.hpp"
#include "divbench/mechanisms.hpp"
#include "divbench/metrics.hpp"
#include "divbench/variation.hpp"
#include "support.hpp"

using namespace divbench;
using divbench::test::genome_strings;
using divbench::test::random_population;

TEST(Property, HammingSymmetryIdentityTriangle) {
  RandomSource r(100, 0);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + r.uniform_index(200);
    const auto a = random_genome(n, r);
    const auto b = random_genome(n, r);
    const auto c = random_genome(n, r);
    ASSERT_EQ(hamming_distance(a, b), hamming_distance(b, a));
    ASSERT_EQ(hamming_distance(a, a), 0U);
    ASSERT_LE(hamming_distance(a, c), hamming_distance(a, b) + hamming_distance(b, c));
  }
}

TEST(Property, RandomSourceReplaysTenThousandDraws) {
  RandomSource a(2718, 28);
  RandomSource b(2718, 28);
  for (int i = 0; i < 10000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Property, OperatorsPreserveLength) {
  RandomSource r(101, 0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + r.uniform_index(150);
    const auto a = random_genome(n, r);
    const auto b = random_genome(n, r);
    auto [c1, c2] = two_point_crossover(a, b, r);
    ASSERT_EQ(c1.length(), n);
    ASSERT_EQ(c2.length(), n);
    ASSERT_EQ(bit_flip_mutation(a, r.uniform01(), r).length(), n);
  }
}

TEST(Property, CrossoverPositionMultiset) {
  RandomSource r(102, 0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + r.uniform_index(130);
    const auto a = random_genome(n, r);
    const auto b = random_genome(n, r);
    auto [c1, c2] = two_point_crossover(a, b, r);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(std::multiset<bool>({c1[i], c2[i]}), std::multiset<bool>({a[i], b[i]}));
    }
  }
}

TEST(Property, OffspringCountIsLambda) {
  RandomSource r(103, 0);
  auto pop = random_population(10, 16, r);
  for (std::size_t lambda : {1U, 2U, 7U, 30U, 999U, 10000U}) {
    const auto kids = generate_offspring(pop, lambda, VariationConfig{}, r);
    ASSERT_EQ(kids.size(), lambda);
    for (const auto& k : kids) ASSERT_EQ(k.genome.length(), 16U);
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t lambda = 1 + r.uniform_index(10000);
    ASSERT_EQ(generate_offspring(pop, lambda, VariationConfig{}, r).size(), lambda);
  }
}

TEST(Property, TournamentWinnersComeFromPopulation) {
  RandomSource r(104, 0);
  for (int t = 0; t < 100; ++t) {
    auto pop = random_population(1 + r.uniform_index(30), 12, r);
    evaluate(pop, Landscape::onemax(12));
    std::set<std::string> members;
    for (const auto& s : genome_strings(pop)) members.insert(s);
    for (const auto& s : genome_strings(tournament_select(pop, 40, 1 + r.uniform_index(5), r))) {
      ASSERT_TRUE(members.contains(s));
    }
  }
}

TEST(Property, PeaksFitnessBoundedByEachTerm) {
  RandomSource r(105, 0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + r.uniform_index(80);
    std::vector<Peak> peaks;
    for (std::size_t p = 0; p < 1 + r.uniform_index(4); ++p) {
      peaks.push_back({random_genome(n, r), static_cast<double>(r.uniform_index(120))});
    }
    const auto l = Landscape::peaks(peaks);
    const auto x = random_genome(n, r);
    const double f = l.evaluate(x);
    bool attained = false;
    for (const auto& p : peaks) {
      const double term = p.height - static_cast<double>(hamming_distance(x, p.position));
      ASSERT_GE(f, term);
      attained = attained || f == term;
    }
    ASSERT_TRUE(attained);
  }
}

TEST(Property, TwoMaxComplementSymmetry) {
  RandomSource r(106, 0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + r.uniform_index(150);
    const auto l = Landscape::twomax(n);
    const auto x = random_genome(n, r);
    ASSERT_EQ(l.evaluate(x), l.evaluate(x.complement()));
  }
}

TEST(Property, MovePeakPreservesLengthAndHeight) {
  RandomSource r(107, 0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + r.uniform_index(150);
    const Peak p{random_genome(n, r), static_cast<double>(r.uniform_index(100))};
    const auto q = move_peak(p, r.uniform01(), r);
    ASSERT_EQ(q.position.length(), n);
    ASSERT_EQ(q.height, p.height);
  }
}

TEST(Property, ScheduleReplayReproducesLandscapes) {
  for (const auto& name : preset_names()) {
    const auto preset = make_preset(name);
    auto replay = [&] {
      RandomSource r(31, 5);
      std::vector<Landscape> seq{preset.initial};
      for (const auto& e : preset.schedule) seq.push_back(apply_change(seq.back(), e, r));
      return seq;
    };
    ASSERT_EQ(replay(), replay()) << name;
  }
}

TEST(Property, StepsKeepMuAndReplay) {
  const auto l = Landscape::twomax(24);
  for (auto alg : all_algorithms()) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto run = [&] {
        RandomSource rng(seed, 0);
        MechanismConfig m;
        m.sharing_radius = 6;
        m.clearing_radius = 6;
        m.niche_cap = 3;
        Evolution evo(alg, 20, 24, {}, m, l, rng);
        std::vector<std::string> trace;
        for (std::size_t g = 0; g < 25; ++g) {
          evo.step(l, 10, g, rng);
          const auto pop = evo.population();
          EXPECT_EQ(pop.size(), 20U);
          for (const auto& s : genome_strings(pop)) trace.push_back(s);
        }
        return trace;
      };
      ASSERT_EQ(run(), run()) << to_string(alg) << " seed " << seed;
    }
  }
}

TEST(Property, SharingNeverRaisesFitness) {
  RandomSource r(108, 0);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + r.uniform_index(30);
    auto group = random_population(2 + r.uniform_index(25), n, r);
    for (auto& i : group) i.raw_fitness = i.effective_fitness = static_cast<double>(r.uniform_index(50));
    const std::size_t radius = 1 + r.uniform_index(n);
    const double alpha = 0.5 + 3.0 * r.uniform01();
    sharing_adjust(group, radius, alpha);
    for (std::size_t i = 0; i < group.size(); ++i) {
      ASSERT_LE(group[i].effective_fitness, group[i].raw());
      bool neighbour = false;
      for (std::size_t j = 0; j < group.size(); ++j) {
        neighbour = neighbour ||
                    (j != i && hamming_distance(group[i].genome, group[j].genome) < radius);
      }
      // With raw 0 both sides are 0 whatever the neighbourhood.
      if (group[i].raw() > 0) ASSERT_EQ(group[i].effective_fitness == group[i].raw(), !neighbour);
    }
  }
}

TEST(Property, ClearingNicheCapacity) {
  RandomSource r(109, 0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + r.uniform_index(8);
    auto group = random_population(1 + r.uniform_index(20), n, r);
    for (auto& i : group) i.raw_fitness = i.effective_fitness = 1.0 + static_cast<double>(r.uniform_index(10));
    const std::size_t radius = 1 + r.uniform_index(n);
    const std::size_t cap = 1 + r.uniform_index(4);
    clearing_adjust(group, radius, cap);
    // Winners are the members a later pass would open niches for; the best
    // survivor of each ball is one, and each ball holds at most cap survivors
    // counted from its centre.
    std::vector<std::size_t> order(group.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return group[a].raw() > group[b].raw(); });
    for (std::size_t a = 0; a < order.size(); ++a) {
      const auto& c = group[order[a]];
      if (c.effective_fitness <= 0) continue;
      std::size_t survivors = 1;
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const auto& o = group[order[b]];
        if (o.effective_fitness > 0 && hamming_distance(c.genome, o.genome) < radius) ++survivors;
      }
      ASSERT_LE(survivors, cap);
    }
  }
}

TEST(Property, CrowdingSlotsNeverWorsen) {
  const auto l = Landscape::onemax(40);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomSource rng(seed, 0);
    auto pop = random_population(30, 40, rng);
    evaluate(pop, l);
    VariationConfig v;
    MechanismConfig m;
    for (int g = 0; g < 60; ++g) {
      const auto next = crowding_step(pop, StepContext{l, 30, v, m, rng});
      for (std::size_t i = 0; i < pop.size(); ++i) ASSERT_GE(next[i].raw(), pop[i].raw());
      pop = next;
    }
  }
}

TEST(Property, UniqueSelectDistinctWhenPossible) {
  RandomSource r(110, 0);
  for (int t = 0; t < 200; ++t) {
    auto pool = random_population(10 + r.uniform_index(60), 5, r);
    for (auto& i : pool) i.raw_fitness = i.effective_fitness = static_cast<double>(i.genome.count_ones());
    std::set<std::string> distinct;
    for (const auto& s : genome_strings(pool)) distinct.insert(s);
    const std::size_t mu = 1 + r.uniform_index(distinct.size());
    const auto out = unique_select(pool, mu, 3, r);
    ASSERT_EQ(out.size(), mu);
    std::set<std::string> seen;
    for (const auto& s : genome_strings(out)) ASSERT_TRUE(seen.insert(s).second);
  }
}

TEST(Property, RingMigrationConservesCount) {
  RandomSource r(111, 0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t islands = 1 + r.uniform_index(6);
    const std::size_t size = 2 + r.uniform_index(10);
    std::vector<Population> pops;
    for (std::size_t i = 0; i < islands; ++i) {
      auto p = random_population(size, 10, r);
      evaluate(p, Landscape::onemax(10));
      pops.push_back(p);
    }
    ring_migrate(pops, 1 + r.uniform_index(size - 1));
    std::size_t total = 0;
    for (const auto& p : pops) total += p.size();
    ASSERT_EQ(total, islands * size);
  }
}

TEST(Property, InertiaEqualsPairwiseOverSize) {
  RandomSource r(112, 0);
  for (int t = 0; t < 1000; ++t) {
    const auto pop = random_population(1 + r.uniform_index(50), 1 + r.uniform_index(100), r);
    const double lhs = inertia_diversity(pop);
    const double rhs = pairwise_hamming_diversity(pop) / static_cast<double>(pop.size());
    ASSERT_LE(std::abs(lhs - rhs), 1e-9);
  }
}

TEST(Property, RecordsWellFormedAcrossSeeds) {
  for (std::uint64_t seed : {1ULL, 77ULL, 9001ULL}) {
    for (auto alg : all_algorithms()) {
      ExperimentConfig cfg;
      cfg.algorithm = alg;
      cfg.problem = "moving-height-changing-peaks";
      cfg.base_seed = seed;
      cfg.generations = 320;
      const auto run = run_single(cfg, 0);
      ASSERT_EQ(run.records.size(), 320U);
      for (const auto& rec : run.records) {
        ASSERT_LE(rec.raw.min, rec.raw.avg);
        ASSERT_LE(rec.raw.avg, rec.raw.max);
        ASSERT_LE(rec.effective.min, rec.effective.avg);
        ASSERT_LE(rec.effective.avg, rec.effective.max);
        ASSERT_GE(rec.inertia_diversity, 0.0);
      }
      ASSERT_EQ(run.summary.offline_performance, offline_performance_from_records(run.records));
      ASSERT_EQ(run.summary.max_achieved_per_period.size(), 3U);
    }
  }
}

TEST(Property, ProbabilityMetricsInUnitInterval) {
  RandomSource r(113, 0);
  for (int t = 0; t < 200; ++t) {
    std::vector<FitnessSeries> runs(1 + r.uniform_index(10));
    for (auto& s : runs) {
      s.resize(20);
      for (auto& v : s) v = static_cast<double>(r.uniform_index(101));
    }
    const double p = likelihood_of_optimality(runs, 100, 1 + r.uniform_index(19));
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
    const double acc = optimisation_accuracy(runs[0][0], 100, 0);
    ASSERT_GE(acc, 0.0);
    ASSERT_LE(acc, 1.0);
    const double st = stability(acc, r.uniform01());
    ASSERT_GE(st, 0.0);
    ASSERT_LE(st, 1.0);
  }
}

TEST(Property, ReplicatedRunZeroEqualsSingle) {
  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::unique;
  cfg.problem = "two-moving-peaks";
  cfg.runs = 3;
  cfg.generations = 200;
  EXPECT_EQ(run_replicated(cfg).runs[0].records, run_single(cfg, 0).records);
}

TEST(Property, SeedChangesTrajectoryNotShape) {
  ExperimentConfig cfg;
  cfg.problem = "one-moving-peak";
  cfg.generations = 200;
  const auto a = run_single(cfg, 0);
  cfg.base_seed = 2;
  const auto b = run_single(cfg, 0);
  EXPECT_NE(a.records, b.records);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t g = 0; g < a.records.size(); ++g) {
    EXPECT_EQ(a.records[g].period_index, b.records[g].period_index);
  }
}
