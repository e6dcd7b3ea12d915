#pragma once

#include <cstdint>
#include <vector>

#include "hamq/core.hpp"

namespace hamq {

/// k-1 consecutive blocks covering positions 0..n-1, sizes differing by
/// at most one (the first n mod (k-1) blocks take the ceiling size).
struct BlockPartition {
  struct Range {
    std::size_t begin;
    std::size_t end;  // half-open
    std::size_t size() const { return end - begin; }
  };
  std::vector<Range> blocks;
};

/// Requires k >= 2 and k-1 <= n. A k of 1 has no blocks; use the single
/// query branch instead.
BlockPartition partition_blocks(std::size_t n, std::int64_t k);

/// The one-query attack: query all 1s, predict all 1s iff the observed
/// fraction is at least 1/m (exact integer comparison), else all 2s.
LabelSequence run_small_k1(Oracle& oracle);

/// The block-voting attack. Query i is label 1 on blocks 1..i-1 and
/// label 2 elsewhere; block i is predicted all 1s iff the (i+1)th answer
/// is at least the ith. Uses exactly k queries, no randomness.
LabelSequence run_small(Oracle& oracle, std::int64_t k);

class SmallKAttack final : public Attack {
 public:
  explicit SmallKAttack(std::int64_t k);

  LabelSequence run(Oracle& oracle, Rng& rng) const override;
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
};

}  // namespace hamq
