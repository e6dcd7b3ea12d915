#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hamq/rng.hpp"

namespace hamq {

/// Class labels are 1-based: valid values are 1..m.
using Label = std::uint16_t;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An attack tried to spend more oracle queries than its budget allows.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact fraction num/den. Kept unreduced; equality is by cross-multiplication.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
};

/// A sequence in [m]^n. Immutable after construction.
class LabelSequence {
 public:
  /// Tag for the unchecked constructor: caller guarantees every entry is in 1..m.
  struct Unchecked {};

  LabelSequence(std::vector<Label> labels, std::uint32_t m);
  LabelSequence(Unchecked, std::vector<Label> labels, std::uint32_t m)
      : labels_(std::move(labels)), m_(m) {}

  static LabelSequence constant(std::size_t n, std::uint32_t m, Label fill);

  std::size_t n() const { return labels_.size(); }
  std::uint32_t m() const { return m_; }
  Label operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;

 private:
  std::vector<Label> labels_;
  std::uint32_t m_;
};

/// A query is shaped exactly like the hidden sequence it is matched against.
using QuerySequence = LabelSequence;

/// Answer to one oracle query. The integer match count is authoritative;
/// fraction and Hamming distance are derived from it.
struct MatchResult {
  std::int64_t matches = 0;
  std::int64_t n = 0;

  std::int64_t hamming() const { return n - matches; }
  Ratio fraction() const { return {matches, n}; }

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Number of positions where q and z agree. Throws ShapeError on any
/// length or alphabet mismatch.
MatchResult match_count(const QuerySequence& q, const LabelSequence& z);

/// Query access an attack is given. Answers are exact match fractions;
/// the implementation keeps count of queries consumed.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual std::size_t n() const = 0;
  virtual std::uint32_t m() const = 0;
  virtual MatchResult query(const QuerySequence& q) = 0;
  virtual std::int64_t queries_used() const = 0;
  virtual std::optional<std::int64_t> budget() const = 0;
};

/// The reference oracle: holds the hidden sequence, answers exact match
/// counts, and enforces an optional query budget. Grading the final
/// prediction via final_accuracy does not consume budget.
class MatchOracle final : public Oracle {
 public:
  explicit MatchOracle(LabelSequence hidden,
                       std::optional<std::int64_t> budget = std::nullopt);

  std::size_t n() const override { return hidden_.n(); }
  std::uint32_t m() const override { return hidden_.m(); }
  MatchResult query(const QuerySequence& q) override;
  std::int64_t queries_used() const override { return used_; }
  std::optional<std::int64_t> budget() const override { return budget_; }

  Ratio final_accuracy(const LabelSequence& zhat) const;

  // Test instrumentation: when enabled, every query and answer is kept.
  void record_transcript(bool on) { record_ = on; }
  const std::vector<QuerySequence>& transcript_queries() const { return tq_; }
  const std::vector<MatchResult>& transcript_answers() const { return ta_; }

 private:
  LabelSequence hidden_;
  std::optional<std::int64_t> budget_;
  std::int64_t used_ = 0;
  bool record_ = false;
  std::vector<QuerySequence> tq_;
  std::vector<MatchResult> ta_;
};

/// A k-query attack. Interacts with the hidden sequence only through the
/// oracle and emits a final estimate. Implementations hold no per-run
/// state; one run is single-threaded, distinct runs may be concurrent.
class Attack {
 public:
  virtual ~Attack() = default;
  virtual LabelSequence run(Oracle& oracle, Rng& rng) const = 0;
};

/// Each coordinate independently uniform on 1..m.
LabelSequence sample_uniform_labels(std::size_t n, std::uint32_t m, Rng& rng);

}  // namespace hamq
