#include "robsched/rmq.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace robsched {

IntervalMinTable::IntervalMinTable(std::span<const Time> values) : n_(values.size()) {
  if (n_ == 0) return;
  levels_.emplace_back(values.begin(), values.end());
  for (std::size_t len = 2; len <= n_; len *= 2) {
    const auto& prev = levels_.back();
    std::vector<Time> level(n_ / len);
    for (std::size_t t = 0; t < level.size(); ++t)
      level[t] = std::min(prev[2 * t], prev[2 * t + 1]);
    levels_.push_back(std::move(level));
  }
}

std::size_t IntervalMinTable::stored_entries() const noexcept {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

Time IntervalMinTable::range_min(std::size_t l, std::size_t u, QueryTrace* trace) const {
  if (l < 1 || l > u || u > n_)
    throw InvalidInput("range_min: need 1 <= l <= u <= n, got l=" + std::to_string(l) +
                       " u=" + std::to_string(u) + " n=" + std::to_string(n_));

  Time best = std::numeric_limits<Time>::max();
  std::size_t j = l - 1;
  std::size_t k = 0;
  auto consume = [&] {
    const std::size_t len = std::size_t{1} << k;
    best = std::min(best, levels_[k][j >> k]);
    if (trace) trace->block_lengths.push_back(len);
    j += len;
  };

  // Growing phase: invariant 2^k | j.
  while (j + (std::size_t{1} << k) <= u) {
    const std::size_t twice = std::size_t{1} << (k + 1);
    if (j + twice <= u && j % twice == 0)
      ++k;
    else
      consume();
  }
  // Shrinking phase.
  while (j < u) {
    if (j + (std::size_t{1} << k) > u)
      --k;
    else
      consume();
  }
  return best;
}

}  // namespace robsched
