#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace divbench {

/// Deterministic random stream identified by (base_seed, stream_index).
///
/// The engine is std::mt19937_64, whose raw output sequence is fixed by the
/// standard. All derived draws (uniform reals, bounded integers, coin flips)
/// are computed here rather than through std::*_distribution, whose algorithms
/// are implementation-defined, so a given (seed, stream) produces the same
/// draws under every standard library.
///
/// Not thread-safe; one instance belongs to one run.
class RandomSource {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64; seed = splitmix64(splitmix64(base_seed) + stream_index); "
      "uniform01 = top 53 bits; bounded ints by rejection";

  RandomSource(std::uint64_t base_seed, std::uint64_t stream_index);

  std::uint64_t base_seed() const noexcept { return base_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform real in [0, 1).
  double uniform01();

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound);

  /// True with probability p (p <= 0 never, p >= 1 always; no draw is skipped).
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::uint64_t base_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace divbench
