#include "hamq/attack_small.hpp"

#include <string>

namespace hamq {

BlockPartition partition_blocks(std::size_t n, std::int64_t k) {
  if (k < 2) throw ParamError("partition_blocks needs k >= 2");
  const std::size_t nb = static_cast<std::size_t>(k - 1);
  if (nb > n)
    throw ParamError("cannot split n=" + std::to_string(n) + " positions into " +
                     std::to_string(nb) + " blocks");
  BlockPartition part;
  part.blocks.reserve(nb);
  const std::size_t base = n / nb;
  const std::size_t extra = n % nb;
  std::size_t at = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    part.blocks.push_back({at, at + size});
    at += size;
  }
  return part;
}

LabelSequence run_small_k1(Oracle& oracle) {
  const std::size_t n = oracle.n();
  const std::uint32_t m = oracle.m();
  const MatchResult r = oracle.query(LabelSequence::constant(n, m, 1));
  // fraction >= 1/m, exactly: matches * m >= n
  const bool ones = r.matches * static_cast<std::int64_t>(m) >= static_cast<std::int64_t>(n);
  return LabelSequence::constant(n, m, ones ? Label{1} : Label{2});
}

LabelSequence run_small(Oracle& oracle, std::int64_t k) {
  if (k < 1) throw ParamError("run_small needs k >= 1");
  if (k == 1) return run_small_k1(oracle);

  const std::size_t n = oracle.n();
  const std::uint32_t m = oracle.m();
  const BlockPartition part = partition_blocks(n, k);

  // Query i has label 1 on blocks 1..i-1, label 2 on the rest; consecutive
  // queries differ exactly on one block, so the buffer grows monotonically.
  std::vector<Label> buf(n, 2);
  std::vector<std::int64_t> answers;
  answers.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    if (i > 0) {
      const auto& b = part.blocks[static_cast<std::size_t>(i - 1)];
      for (std::size_t j = b.begin; j < b.end; ++j) buf[j] = 1;
    }
    answers.push_back(oracle.query(QuerySequence(LabelSequence::Unchecked{}, buf, m)).matches);
  }

  std::vector<Label> prediction(n);
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const Label vote = answers[b + 1] >= answers[b] ? Label{1} : Label{2};
    for (std::size_t j = part.blocks[b].begin; j < part.blocks[b].end; ++j)
      prediction[j] = vote;
  }
  return LabelSequence(LabelSequence::Unchecked{}, std::move(prediction), m);
}

SmallKAttack::SmallKAttack(std::int64_t k) : k_(k) {
  if (k < 1) throw ParamError("small attack needs k >= 1");
}

LabelSequence SmallKAttack::run(Oracle& oracle, Rng&) const { return run_small(oracle, k_); }

}  // namespace hamq
