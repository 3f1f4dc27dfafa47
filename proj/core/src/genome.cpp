#include "divbench/genome.hpp"

#include <stdexcept>

#include "divbench/errors.hpp"

namespace divbench {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

}  // namespace

Genome::Genome(std::size_t length) : length_(length), words_(word_count(length), 0) {}

Genome Genome::from_string(std::string_view bits) {
  Genome g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      g.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("genome string may contain only '0' and '1'");
    }
  }
  return g;
}

Genome Genome::ones(std::size_t length) { return Genome(length).complement(); }

bool Genome::at(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("genome index out of range");
  return (*this)[i];
}

void Genome::set(std::size_t i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::size_t Genome::count_ones() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Genome Genome::complement() const {
  Genome out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

Genome Genome::operator^(const Genome& mask) const {
  if (mask.length_ != length_) throw std::invalid_argument("xor mask length mismatch");
  Genome out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= mask.words_[w];
  return out;
}

std::string Genome::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

void Genome::clear_tail() noexcept {
  if (const std::size_t rem = length_ % 64; rem != 0) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

std::size_t hamming_distance(const Genome& a, const Genome& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("hamming_distance: genome lengths differ (" +
                                std::to_string(a.length()) + " vs " +
                                std::to_string(b.length()) + ")");
  }
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t d = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) {
    d += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  }
  return d;
}

Genome random_genome(std::size_t length, RandomSource& rng) {
  if (length == 0) throw std::invalid_argument("random_genome: length must be >= 1");
  Genome g(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (rng.bernoulli(0.5)) g.set(i, true);
  }
  return g;
}

std::size_t GenomeHash::operator()(const Genome& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ g.length();
  for (auto w : g.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

double Individual::raw() const {
  if (!raw_fitness) throw InvalidStateError("individual has not been evaluated");
  return *raw_fitness;
}

void check_population(const Population& pop, std::string_view what) {
  if (pop.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  const std::size_t len = pop.front().genome.length();
  for (const auto& ind : pop) {
    if (ind.genome.length() != len) {
      throw std::invalid_argument(std::string(what) + " mixes genome lengths");
    }
  }
}

}  // namespace divbench
