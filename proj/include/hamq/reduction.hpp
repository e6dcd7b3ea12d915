#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hamq/core.hpp"

namespace hamq {

/// n independent permutations of 1..m, one per coordinate. Conjugating an
/// attack by such a bundle makes any fixed hidden sequence look uniform.
class PermutationBundle {
 public:
  /// Builds from a row-major n x m table: table[i*m + (v-1)] is the image
  /// of label v at coordinate i. Each row must be a bijection of 1..m.
  PermutationBundle(std::vector<Label> table, std::size_t n, std::uint32_t m);

  static PermutationBundle identity(std::size_t n, std::uint32_t m);
  static PermutationBundle sample(std::size_t n, std::uint32_t m, Rng& rng);

  std::size_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  Label image(std::size_t i, Label v) const { return table_[i * m_ + v - 1]; }

  PermutationBundle inverse() const;
  LabelSequence apply(const LabelSequence& z) const;

 private:
  struct Unchecked {};
  PermutationBundle(Unchecked, std::vector<Label> table, std::size_t n, std::uint32_t m)
      : table_(std::move(table)), n_(n), m_(m) {}

  std::vector<Label> table_;
  std::size_t n_;
  std::uint32_t m_;
};

/// Fisher-Yates per coordinate; exactly uniform over S_m^n.
PermutationBundle sample_bundle(std::size_t n, std::uint32_t m, Rng& rng);

/// Coordinate-wise application: out_i = perm_i(z_i).
LabelSequence apply_bundle(const PermutationBundle& b, const LabelSequence& z);

/// Oracle view that forwards each query through a bundle before it reaches
/// the wrapped oracle; answers pass back unchanged.
class PermutedOracle final : public Oracle {
 public:
  PermutedOracle(Oracle& inner, const PermutationBundle& bundle);

  std::size_t n() const override { return inner_.n(); }
  std::uint32_t m() const override { return inner_.m(); }
  MatchResult query(const QuerySequence& q) override { return inner_.query(bundle_.apply(q)); }
  std::int64_t queries_used() const override { return inner_.queries_used(); }
  std::optional<std::int64_t> budget() const override { return inner_.budget(); }

 private:
  Oracle& inner_;
  const PermutationBundle& bundle_;
};

/// The worst-case-to-average-case wrapper: samples a fresh bundle per run,
/// conjugates every inner query and the final estimate by it. A forced
/// bundle is a test hook; production paths sample from the run's rng.
class PermutationWrappedAttack final : public Attack {
 public:
  explicit PermutationWrappedAttack(std::unique_ptr<Attack> inner,
                                    std::optional<PermutationBundle> forced = std::nullopt);

  LabelSequence run(Oracle& oracle, Rng& rng) const override;

 private:
  std::unique_ptr<Attack> inner_;
  std::optional<PermutationBundle> forced_;
};

std::unique_ptr<Attack> wrap_attack(std::unique_ptr<Attack> inner,
                                    std::optional<PermutationBundle> forced = std::nullopt);

}  // namespace hamq
