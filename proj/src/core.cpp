#include "hamq/core.hpp"

#include <limits>
#include <string>

namespace hamq {

namespace {

void check_shape(std::size_t n, std::uint32_t m) {
  if (n == 0) throw ParamError("sequence length must satisfy n >= 1");
  if (m < 2) throw ParamError("class count must satisfy m >= 2");
  if (m > std::numeric_limits<Label>::max())
    throw ParamError("class count exceeds label storage limit " +
                     std::to_string(std::numeric_limits<Label>::max()));
}

}  // namespace

LabelSequence::LabelSequence(std::vector<Label> labels, std::uint32_t m)
    : labels_(std::move(labels)), m_(m) {
  check_shape(labels_.size(), m_);
  for (const Label v : labels_) {
    if (v < 1 || v > m_)
      throw ShapeError("label " + std::to_string(v) + " outside 1.." + std::to_string(m_));
  }
}

LabelSequence LabelSequence::constant(std::size_t n, std::uint32_t m, Label fill) {
  check_shape(n, m);
  if (fill < 1 || fill > m) throw ShapeError("fill label outside 1..m");
  return LabelSequence(Unchecked{}, std::vector<Label>(n, fill), m);
}

MatchResult match_count(const QuerySequence& q, const LabelSequence& z) {
  if (q.n() != z.n() || q.m() != z.m())
    throw ShapeError("query shape (" + std::to_string(q.n()) + "," + std::to_string(q.m()) +
                     ") does not match sequence shape (" + std::to_string(z.n()) + "," +
                     std::to_string(z.m()) + ")");
  const Label* a = q.labels().data();
  const Label* b = z.labels().data();
  const std::size_t n = z.n();
  std::int64_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) matches += (a[i] == b[i]);
  return {matches, static_cast<std::int64_t>(n)};
}

MatchOracle::MatchOracle(LabelSequence hidden, std::optional<std::int64_t> budget)
    : hidden_(std::move(hidden)), budget_(budget) {
  if (budget_ && *budget_ < 0) throw ParamError("query budget must be non-negative");
}

MatchResult MatchOracle::query(const QuerySequence& q) {
  if (q.n() != hidden_.n() || q.m() != hidden_.m())
    throw ShapeError("query shape does not match the oracle's hidden sequence");
  if (budget_ && used_ >= *budget_)
    throw BudgetError("query budget of " + std::to_string(*budget_) + " exhausted");
  const MatchResult r = match_count(q, hidden_);
  ++used_;
  if (record_) {
    tq_.push_back(q);
    ta_.push_back(r);
  }
  return r;
}

Ratio MatchOracle::final_accuracy(const LabelSequence& zhat) const {
  return match_count(zhat, hidden_).fraction();
}

LabelSequence sample_uniform_labels(std::size_t n, std::uint32_t m, Rng& rng) {
  check_shape(n, m);
  std::vector<Label> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<Label>(1 + rng.below(m));
  return LabelSequence(LabelSequence::Unchecked{}, std::move(out), m);
}

}  // namespace hamq
