#pragma once

#include <cstdint>
#include <random>

#include "robsched/core.hpp"

namespace robsched {

struct IntRange {
  Time lo = 0;
  Time hi = 0;
};

/// Random instance shape. r_lo, p and the interval width r_hi - r_lo are
/// drawn independently and uniformly from their inclusive ranges.
struct GeneratorConfig {
  std::size_t n = 10;
  IntRange release{0, 30};
  IntRange processing{1, 10};
  IntRange width{0, 10};
  UncertaintyModel model{UncertaintyKind::U2, 1};
};

/// Throws InvalidInput for n = 0, inverted ranges, p below 1, negative
/// releases or widths.
void check_config(const GeneratorConfig& config);

/// Uniform integer in [lo, hi] by rejection on raw 64-bit draws. Unlike
/// std::uniform_int_distribution this is identical on every standard
/// library.
Time uniform_int(std::mt19937_64& rng, Time lo, Time hi);

/// Deterministic in (config, seed).
Instance generate_instance(const GeneratorConfig& config, std::uint64_t seed);
Instance generate_instance(const GeneratorConfig& config, std::mt19937_64& rng);

}  // namespace robsched
