#include "robsched/generate.hpp"

#include <limits>
#include <string>
#include <vector>

namespace robsched {

void check_config(const GeneratorConfig& config) {
  if (config.n == 0) throw InvalidInput("n must be at least 1");
  auto check = [](const IntRange& r, Time min_lo, const char* name) {
    if (r.lo > r.hi)
      throw InvalidInput(std::string(name) + " range is inverted (" + std::to_string(r.lo) + " > " +
                         std::to_string(r.hi) + ")");
    if (r.lo < min_lo)
      throw InvalidInput(std::string(name) + " range must start at " + std::to_string(min_lo) +
                         " or above");
  };
  check(config.release, 0, "release");
  check(config.processing, 1, "processing");
  check(config.width, 0, "width");
  Time top;
  if (__builtin_add_overflow(config.release.hi, config.width.hi, &top))
    throw InvalidInput("release + width range overflows 64-bit time");
  if (config.model.gamma < 0 || (config.model.kind == UncertaintyKind::U2 && config.model.gamma < 1))
    throw InvalidInput("gamma must be >= 0 for U1 and >= 1 for U2");
}

Time uniform_int(std::mt19937_64& rng, Time lo, Time hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<Time>(rng());
  const std::uint64_t buckets = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % buckets;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<Time>(static_cast<std::uint64_t>(lo) + draw % buckets);
}

Instance generate_instance(const GeneratorConfig& config, std::mt19937_64& rng) {
  check_config(config);
  std::vector<Job> jobs(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    Job& job = jobs[i];
    job.id = static_cast<JobId>(i + 1);
    job.r_lo = uniform_int(rng, config.release.lo, config.release.hi);
    job.p = uniform_int(rng, config.processing.lo, config.processing.hi);
    job.r_hi = job.r_lo + uniform_int(rng, config.width.lo, config.width.hi);
  }
  return Instance(std::move(jobs), config.model);
}

Instance generate_instance(const GeneratorConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return generate_instance(config, rng);
}

}  // namespace robsched
