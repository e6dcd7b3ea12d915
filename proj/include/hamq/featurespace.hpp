#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hamq/core.hpp"

namespace hamq {

using FeatureId = std::uint64_t;

/// A total deterministic map from feature ids to labels in 1..m. Attack
/// classifiers are lazy seeded functions: only ids the oracle actually
/// evaluates are ever computed.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Label at(FeatureId x) const = 0;
};

std::shared_ptr<const Classifier> make_constant_classifier(Label value);
std::shared_ptr<const Classifier> make_classifier(std::function<Label(FeatureId)> fn);

/// Query access in the unknown-test-features game: each query is a
/// classifier over the whole universe, graded on the hidden test subset.
class ClassifierOracle {
 public:
  virtual ~ClassifierOracle() = default;
  virtual std::size_t n() const = 0;
  virtual std::uint32_t m() const = 0;
  virtual std::uint64_t universe_size() const = 0;
  virtual MatchResult query(const Classifier& f) = 0;
  virtual std::int64_t queries_used() const = 0;
  virtual std::optional<std::int64_t> budget() const = 0;
};

/// Reference oracle: holds the hidden test ids S_X (all distinct) and
/// their labels, evaluates each query classifier on S_X only. The attack
/// never learns which ids are in S_X.
class FeatureOracle final : public ClassifierOracle {
 public:
  FeatureOracle(std::uint64_t universe_size, std::vector<FeatureId> test_ids,
                std::vector<Label> test_labels, std::uint32_t m,
                std::optional<std::int64_t> budget = std::nullopt);

  std::size_t n() const override { return ids_.size(); }
  std::uint32_t m() const override { return m_; }
  std::uint64_t universe_size() const override { return universe_; }
  MatchResult query(const Classifier& f) override;
  std::int64_t queries_used() const override { return used_; }
  std::optional<std::int64_t> budget() const override { return budget_; }

  Ratio final_accuracy(const Classifier& fhat) const;

  // Test instrumentation: per query, the labels the classifier produced on
  // S_X in oracle order, plus the answer.
  void record_transcript(bool on) { record_ = on; }
  const std::vector<std::vector<Label>>& transcript_evaluations() const { return te_; }
  const std::vector<MatchResult>& transcript_answers() const { return ta_; }

 private:
  std::int64_t evaluate(const Classifier& f, std::vector<Label>* out) const;

  std::uint64_t universe_;
  std::vector<FeatureId> ids_;
  std::vector<Label> labels_;
  std::uint32_t m_;
  std::optional<std::int64_t> budget_;
  std::int64_t used_ = 0;
  bool record_ = false;
  std::vector<std::vector<Label>> te_;
  std::vector<MatchResult> ta_;
};

/// An attack in the unknown-features game: queries are classifiers, the
/// final output is a classifier.
class ClassifierAttack {
 public:
  virtual ~ClassifierAttack() = default;
  virtual std::shared_ptr<const Classifier> run(ClassifierOracle& oracle, Rng& rng) const = 0;
};

/// One independent uniform permutation of 1..m per feature id, fixed for a
/// run by its key. Identity mode is the test hook.
struct FeaturePermuter {
  std::uint64_t key = 0;
  std::uint32_t m = 2;
  bool identity = false;

  std::vector<Label> perm(FeatureId x) const;
  Label map(FeatureId x, Label v) const;
  Label inverse_map(FeatureId x, Label v) const;
};

/// Function-level analogue of the permutation-bundle wrapper: conjugates
/// every query classifier and the final classifier by per-feature
/// permutations sampled fresh each run.
class FeaturePermutationWrappedAttack final : public ClassifierAttack {
 public:
  explicit FeaturePermutationWrappedAttack(std::unique_ptr<ClassifierAttack> inner,
                                           bool identity_hook = false);

  std::shared_ptr<const Classifier> run(ClassifierOracle& oracle, Rng& rng) const override;

 private:
  std::unique_ptr<ClassifierAttack> inner_;
  bool identity_;
};

std::unique_ptr<ClassifierAttack> wrap_attack_features(std::unique_ptr<ClassifierAttack> inner,
                                                       bool identity_hook = false);

/// Uniform block hash for the small-k unknown-features attack: block of x
/// in 0..num_blocks-1, independent and uniform per id under one key.
std::uint32_t block_hash(std::uint64_t key, FeatureId x, std::uint32_t num_blocks);

/// Membership test "x in X_t" that holds with probability exactly t/n.
bool subset_member(std::uint64_t key, FeatureId x, std::uint64_t t, std::uint64_t n);

/// Block-voting attack without test features: ids are hashed into k-1
/// random blocks instead of consecutive ranges. The block_override hook
/// forces the block assignment (model-equivalence tests).
class SmallUnknownAttack final : public ClassifierAttack {
 public:
  explicit SmallUnknownAttack(std::int64_t k,
                              std::function<std::uint32_t(FeatureId)> block_override = {});

  std::shared_ptr<const Classifier> run(ClassifierOracle& oracle, Rng& rng) const override;
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
  std::function<std::uint32_t(FeatureId)> block_override_;
};

/// Test hooks forcing the sampled structure of the large-k unknown attack
/// onto known-features choices.
struct LargeUnknownHook {
  std::function<bool(FeatureId)> member;
  std::function<std::vector<Label>(FeatureId)> column;
  std::optional<std::uint64_t> tie_key;
};

/// Large-k attack without test features: every id joins X_t independently
/// with probability t/n, ids in X_t get independent balanced query columns,
/// decoding is per-id score argmax. Requires knowing n (taken from the
/// oracle).
class LargeUnknownAttack final : public ClassifierAttack {
 public:
  explicit LargeUnknownAttack(std::int64_t k, std::optional<std::size_t> forced_t = std::nullopt,
                              LargeUnknownHook hook = {});

  std::shared_ptr<const Classifier> run(ClassifierOracle& oracle, Rng& rng) const override;

 private:
  std::int64_t k_;
  std::optional<std::size_t> forced_t_;
  LargeUnknownHook hook_;
};

}  // namespace hamq
