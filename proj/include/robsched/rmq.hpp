#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "robsched/core.hpp"

namespace robsched {

/// Static range-minimum structure built from aligned power-of-two blocks.
///
/// Level k holds the minimum of every block (j, j + 2^k] (1-based) with
/// 2^k dividing j and j + 2^k <= n, so fewer than 2n values are stored in
/// total. A query walks left to right, first growing the block size while
/// alignment and the right end allow it, then shrinking it to cover the
/// remainder. Each phase consumes at most one block per level, giving
/// O(log n) per query.
class IntervalMinTable {
 public:
  IntervalMinTable() = default;
  explicit IntervalMinTable(std::span<const Time> values);

  std::size_t size() const noexcept { return n_; }
  std::size_t num_levels() const noexcept { return levels_.size(); }

  /// Minimum of block (j, j + 2^k]; j must be a multiple of 2^k.
  Time block_min(std::size_t level, std::size_t j) const { return levels_.at(level).at(j >> level); }
  std::size_t blocks_at(std::size_t level) const { return levels_.at(level).size(); }
  std::size_t stored_entries() const noexcept;

  /// Lengths of the blocks a query consumed, in order.
  struct QueryTrace {
    std::vector<std::size_t> block_lengths;
  };

  /// Minimum of values[l..u], 1-based inclusive. Throws InvalidInput unless
  /// 1 <= l <= u <= n.
  Time range_min(std::size_t l, std::size_t u, QueryTrace* trace = nullptr) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Time>> levels_;
};

inline IntervalMinTable build_interval_min_table(std::span<const Time> values) {
  return IntervalMinTable(values);
}

}  // namespace robsched
