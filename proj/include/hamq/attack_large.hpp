#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamq/core.hpp"

namespace hamq {

/// Prefix length t = floor(1 + k/(9 ln m)), clamped to [1, n].
std::size_t choose_t(std::size_t n, std::uint32_t m, std::int64_t k);

/// A uniformly shuffled length-k column holding each label floor(k/m)
/// times, with the k mod m leftover slots on a uniform random subset of
/// distinct labels.
std::vector<Label> balanced_column(std::int64_t k, std::uint32_t m, Rng& rng);

/// The k x n query matrix of the large-k attack: balanced independent
/// columns on the first t examples, constant label 1 on the rest.
class BalancedQueryMatrix {
 public:
  BalancedQueryMatrix(std::vector<Label> row_major, std::size_t n, std::uint32_t m,
                      std::int64_t k, std::size_t t);

  std::size_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::int64_t k() const { return k_; }
  std::size_t t() const { return t_; }

  Label entry(std::int64_t i, std::size_t j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  QuerySequence row(std::int64_t i) const;
  std::vector<Label> column(std::size_t j) const;
  std::int64_t column_count(std::size_t j, Label v) const;

 private:
  std::vector<Label> data_;
  std::size_t n_;
  std::uint32_t m_;
  std::int64_t k_;
  std::size_t t_;
};

BalancedQueryMatrix build_queries(std::size_t n, std::uint32_t m, std::int64_t k, std::size_t t,
                                  Rng& rng);

/// Argmax over labels of scores[l]/counts[l] (exact cross-multiplied
/// comparison; labels with zero count are excluded). Ties are broken
/// uniformly with tie_rng; a unique maximum consumes no randomness.
Label argmax_normalized(const std::vector<std::int64_t>& scores,
                        const std::vector<std::int64_t>& counts, Rng& tie_rng);

/// The large-k attack: submits the whole balanced matrix non-adaptively,
/// decodes each prefix example by per-label score argmax, predicts label 1
/// past the prefix. Uses exactly k queries.
class LargeKAttack final : public Attack {
 public:
  explicit LargeKAttack(std::int64_t k, std::optional<std::size_t> forced_t = std::nullopt);

  LabelSequence run(Oracle& oracle, Rng& rng) const override;
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
  std::optional<std::size_t> forced_t_;
};

}  // namespace hamq
