#include "divbench/landscape.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "divbench/errors.hpp"

namespace divbench {

std::string_view to_string(LandscapeKind kind) {
  switch (kind) {
    case LandscapeKind::onemax: return "onemax";
    case LandscapeKind::twomax: return "twomax";
    case LandscapeKind::peaks: return "peaks";
  }
  return "unknown";
}

Landscape Landscape::onemax(std::size_t length) {
  if (length == 0) throw std::invalid_argument("landscape length must be >= 1");
  Landscape l;
  l.kind_ = LandscapeKind::onemax;
  l.length_ = length;
  return l;
}

Landscape Landscape::twomax(std::size_t length) {
  Landscape l = onemax(length);
  l.kind_ = LandscapeKind::twomax;
  return l;
}

Landscape Landscape::peaks(std::vector<Peak> peaks) {
  if (peaks.empty()) throw std::invalid_argument("a peaks landscape needs at least one peak");
  const std::size_t n = peaks.front().position.length();
  if (n == 0) throw std::invalid_argument("landscape length must be >= 1");
  for (const auto& p : peaks) {
    if (p.position.length() != n) throw std::invalid_argument("peak positions differ in length");
  }
  Landscape l;
  l.kind_ = LandscapeKind::peaks;
  l.length_ = n;
  l.peaks_ = std::move(peaks);
  return l;
}

double Landscape::evaluate(const Genome& x) const {
  if (x.length() != length_) {
    throw std::invalid_argument("evaluate: genome length " + std::to_string(x.length()) +
                                " does not match landscape length " +
                                std::to_string(length_));
  }
  switch (kind_) {
    case LandscapeKind::onemax:
      return static_cast<double>(x.count_ones());
    case LandscapeKind::twomax: {
      const std::size_t ones = x.count_ones();
      return static_cast<double>(std::max(ones, length_ - ones));
    }
    case LandscapeKind::peaks: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& p : peaks_) {
        best = std::max(best, p.height - static_cast<double>(hamming_distance(x, p.position)));
      }
      return best;
    }
  }
  return 0.0;
}

double Landscape::max_fitness() const {
  if (kind_ != LandscapeKind::peaks) return static_cast<double>(length_);
  double best = peaks_.front().height;
  for (const auto& p : peaks_) best = std::max(best, p.height);
  return best;
}

double Landscape::min_fitness() const {
  switch (kind_) {
    case LandscapeKind::onemax: return 0.0;
    case LandscapeKind::twomax: return static_cast<double>((length_ + 1) / 2);
    case LandscapeKind::peaks: break;
  }
  const std::size_t k = peaks_.size();
  if (k > 16) throw std::domain_error("min_fitness supports at most 16 peaks");

  // Positions sharing the same bit pattern across all peaks are interchangeable,
  // so x is described by how many ones it places in each pattern class.
  std::vector<std::size_t> class_size(std::size_t{1} << k, 0);
  for (std::size_t i = 0; i < length_; ++i) {
    std::size_t pattern = 0;
    for (std::size_t y = 0; y < k; ++y) {
      if (peaks_[y].position[i]) pattern |= std::size_t{1} << y;
    }
    ++class_size[pattern];
  }
  std::vector<std::size_t> patterns;
  std::vector<std::size_t> sizes;
  double combos = 1.0;
  for (std::size_t c = 0; c < class_size.size(); ++c) {
    if (class_size[c] == 0) continue;
    patterns.push_back(c);
    sizes.push_back(class_size[c]);
    combos *= static_cast<double>(class_size[c] + 1);
  }
  if (combos > 2e7) throw std::domain_error("min_fitness: landscape too irregular to enumerate");

  std::vector<std::size_t> ones(patterns.size(), 0);
  double worst = std::numeric_limits<double>::infinity();
  for (;;) {
    double f = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < k; ++y) {
      std::size_t d = 0;
      for (std::size_t c = 0; c < patterns.size(); ++c) {
        const bool peak_bit = (patterns[c] >> y) & 1U;
        d += peak_bit ? sizes[c] - ones[c] : ones[c];
      }
      f = std::max(f, peaks_[y].height - static_cast<double>(d));
    }
    worst = std::min(worst, f);

    std::size_t c = 0;
    while (c < ones.size() && ones[c] == sizes[c]) ones[c++] = 0;
    if (c == ones.size()) break;
    ++ones[c];
  }
  return worst;
}

std::vector<Genome> Landscape::reference_optima() const {
  switch (kind_) {
    case LandscapeKind::onemax: return {Genome::ones(length_)};
    case LandscapeKind::twomax: return {Genome::zeros(length_), Genome::ones(length_)};
    case LandscapeKind::peaks: break;
  }
  std::vector<Genome> out;
  out.reserve(peaks_.size());
  for (const auto& p : peaks_) out.push_back(p.position);
  return out;
}

Peak move_peak(const Peak& peak, double flip_prob, RandomSource& rng) {
  if (!(flip_prob >= 0.0 && flip_prob <= 1.0)) {
    throw std::invalid_argument("move_peak: flip probability must lie in [0, 1]");
  }
  Genome mask(peak.position.length());
  for (std::size_t i = 0; i < mask.length(); ++i) {
    if (rng.bernoulli(flip_prob)) mask.set(i, true);
  }
  return Peak{peak.position ^ mask, peak.height};
}

Landscape apply_change(const Landscape& landscape, const ChangeEvent& event,
                       RandomSource& rng) {
  if (landscape.kind() != LandscapeKind::peaks) {
    throw std::invalid_argument("apply_change: only peaks landscapes change");
  }
  for (const auto& [index, height] : event.height_updates) {
    if (index >= landscape.peaks_.size()) {
      throw std::invalid_argument("apply_change: no peak with index " + std::to_string(index));
    }
  }
  Landscape next = landscape;
  if (event.move_flip_prob) {
    for (auto& p : next.peaks_) p = move_peak(p, *event.move_flip_prob, rng);
  }
  for (const auto& [index, height] : event.height_updates) next.peaks_[index].height = height;
  ++next.epoch_;
  return next;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "onemax",          "twomax",
      "one-moving-peak", "two-moving-peaks",
      "height-changing-peaks", "moving-height-changing-peaks"};
  return names;
}

ProblemPreset make_preset(std::string_view name, std::size_t length) {
  constexpr std::size_t kGenerations = 450;
  constexpr std::size_t kFirstChange = 150;
  constexpr std::size_t kSecondChange = 300;
  constexpr double kMoveProb = 0.1;

  ProblemPreset preset;
  preset.name = std::string(name);
  preset.total_generations = kGenerations;

  const auto zeros = Genome::zeros(length);
  const auto ones = Genome::ones(length);
  auto moving = [&](std::size_t at) {
    ChangeEvent e;
    e.at_generation = at;
    e.move_flip_prob = kMoveProb;
    return e;
  };

  if (name == "onemax") {
    preset.initial = Landscape::onemax(length);
  } else if (name == "twomax") {
    preset.initial = Landscape::twomax(length);
  } else if (name == "one-moving-peak") {
    preset.initial = Landscape::peaks({{zeros, 100.0}});
    preset.schedule = {moving(kFirstChange), moving(kSecondChange)};
  } else if (name == "two-moving-peaks") {
    preset.initial = Landscape::peaks({{zeros, 100.0}, {ones, 90.0}});
    preset.schedule = {moving(kFirstChange), moving(kSecondChange)};
  } else if (name == "height-changing-peaks" || name == "moving-height-changing-peaks") {
    preset.initial = Landscape::peaks({{zeros, 100.0}, {ones, 100.0}});
    ChangeEvent first;
    first.at_generation = kFirstChange;
    first.height_updates = {{0, 80.0}};
    ChangeEvent second;
    second.at_generation = kSecondChange;
    second.height_updates = {{0, 100.0}, {1, 80.0}};
    if (name == "moving-height-changing-peaks") {
      first.move_flip_prob = kMoveProb;
      second.move_flip_prob = kMoveProb;
    }
    preset.schedule = {first, second};
  } else {
    throw NotFoundError("unknown problem '" + std::string(name) + "'");
  }
  return preset;
}

}  // namespace divbench
