#include "divbench/random.hpp"

#include <stdexcept>

namespace divbench {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomSource::RandomSource(std::uint64_t base_seed, std::uint64_t stream_index)
    : base_seed_(base_seed),
      stream_index_(stream_index),
      engine_(splitmix64(splitmix64(base_seed) + stream_index)) {}

double RandomSource::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RandomSource::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
  const auto b = static_cast<std::uint64_t>(bound);
  // Rejecting values below 2^64 mod b leaves a range that is a multiple of b.
  const std::uint64_t threshold = (0 - b) % b;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return static_cast<std::size_t>(r % b);
  }
}

}  // namespace divbench
