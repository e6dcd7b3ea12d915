#include "hamq/attack_large.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hamq {

std::size_t choose_t(std::size_t n, std::uint32_t m, std::int64_t k) {
  if (m < 2) throw ParamError("choose_t needs m >= 2");
  if (n == 0) throw ParamError("choose_t needs n >= 1");
  if (k < 0) throw ParamError("choose_t needs k >= 0");
  const double raw = 1.0 + static_cast<double>(k) / (9.0 * std::log(static_cast<double>(m)));
  const double floored = std::floor(raw);
  std::size_t t = floored < 1.0 ? 1 : static_cast<std::size_t>(floored);
  return std::min(t, n);
}

std::vector<Label> balanced_column(std::int64_t k, std::uint32_t m, Rng& rng) {
  if (k < 1) throw ParamError("balanced_column needs k >= 1");
  if (m < 2) throw ParamError("balanced_column needs m >= 2");
  const std::int64_t base = k / m;
  const std::uint32_t extra = static_cast<std::uint32_t>(k % m);

  std::vector<Label> col;
  col.reserve(static_cast<std::size_t>(k));
  for (std::uint32_t l = 1; l <= m; ++l)
    col.insert(col.end(), static_cast<std::size_t>(base), static_cast<Label>(l));
  if (extra > 0) {
    // Leftover slots go to a uniform random subset of distinct labels.
    std::vector<Label> labels(m);
    for (std::uint32_t l = 0; l < m; ++l) labels[l] = static_cast<Label>(l + 1);
    for (std::uint32_t j = 0; j < extra; ++j)
      std::swap(labels[j], labels[j + rng.below(m - j)]);
    for (std::uint32_t j = 0; j < extra; ++j) col.push_back(labels[j]);
  }
  for (std::size_t j = col.size() - 1; j > 0; --j)
    std::swap(col[j], col[rng.below(j + 1)]);
  return col;
}

BalancedQueryMatrix::BalancedQueryMatrix(std::vector<Label> row_major, std::size_t n,
                                         std::uint32_t m, std::int64_t k, std::size_t t)
    : data_(std::move(row_major)), n_(n), m_(m), k_(k), t_(t) {
  if (k < 1 || n == 0 || m < 2) throw ParamError("matrix needs k >= 1, n >= 1, m >= 2");
  if (t > n) throw ParamError("prefix length t exceeds n");
  if (data_.size() != static_cast<std::size_t>(k) * n)
    throw ShapeError("matrix storage size is not k*n");
}

QuerySequence BalancedQueryMatrix::row(std::int64_t i) const {
  const Label* begin = data_.data() + static_cast<std::size_t>(i) * n_;
  return QuerySequence(LabelSequence::Unchecked{}, std::vector<Label>(begin, begin + n_), m_);
}

std::vector<Label> BalancedQueryMatrix::column(std::size_t j) const {
  std::vector<Label> col(static_cast<std::size_t>(k_));
  for (std::int64_t i = 0; i < k_; ++i) col[static_cast<std::size_t>(i)] = entry(i, j);
  return col;
}

std::int64_t BalancedQueryMatrix::column_count(std::size_t j, Label v) const {
  std::int64_t c = 0;
  for (std::int64_t i = 0; i < k_; ++i) c += (entry(i, j) == v);
  return c;
}

BalancedQueryMatrix build_queries(std::size_t n, std::uint32_t m, std::int64_t k, std::size_t t,
                                  Rng& rng) {
  if (t > n) throw ParamError("prefix length t exceeds n");
  if (k < 1) throw ParamError("build_queries needs k >= 1");
  std::vector<Label> data(static_cast<std::size_t>(k) * n, Label{1});
  for (std::size_t j = 0; j < t; ++j) {
    const std::vector<Label> col = balanced_column(k, m, rng);
    for (std::int64_t i = 0; i < k; ++i)
      data[static_cast<std::size_t>(i) * n + j] = col[static_cast<std::size_t>(i)];
  }
  return BalancedQueryMatrix(std::move(data), n, m, k, t);
}

Label argmax_normalized(const std::vector<std::int64_t>& scores,
                        const std::vector<std::int64_t>& counts, Rng& tie_rng) {
  if (scores.size() != counts.size() || scores.empty())
    throw ParamError("argmax_normalized needs matching non-empty score/count vectors");
  // Maximize scores[l]/counts[l]; cross-multiplied in 128 bits, so the
  // comparison is exact. Labels never queried (count 0) cannot win.
  std::vector<std::uint32_t> ties;
  for (std::uint32_t l = 0; l < scores.size(); ++l) {
    if (counts[l] == 0) continue;
    if (ties.empty()) {
      ties.push_back(l);
      continue;
    }
    const std::uint32_t best = ties.front();
    const __int128 lhs = static_cast<__int128>(scores[l]) * counts[best];
    const __int128 rhs = static_cast<__int128>(scores[best]) * counts[l];
    if (lhs > rhs) {
      ties.clear();
      ties.push_back(l);
    } else if (lhs == rhs) {
      ties.push_back(l);
    }
  }
  if (ties.empty()) throw ParamError("argmax_normalized: all labels have zero count");
  const std::uint32_t pick =
      ties.size() == 1 ? ties.front()
                       : ties[static_cast<std::size_t>(tie_rng.below(ties.size()))];
  return static_cast<Label>(pick + 1);
}

LargeKAttack::LargeKAttack(std::int64_t k, std::optional<std::size_t> forced_t)
    : k_(k), forced_t_(forced_t) {
  if (k < 1) throw ParamError("large attack needs k >= 1");
}

LabelSequence LargeKAttack::run(Oracle& oracle, Rng& rng) const {
  const std::size_t n = oracle.n();
  const std::uint32_t m = oracle.m();
  const std::size_t t =
      forced_t_ ? std::min(std::max<std::size_t>(*forced_t_, 1), n) : choose_t(n, m, k_);

  // All queries are fixed before the first answer is read.
  const BalancedQueryMatrix matrix = build_queries(n, m, k_, t, rng);
  const std::uint64_t tie_key = rng.next();

  std::vector<std::int64_t> answers(static_cast<std::size_t>(k_));
  for (std::int64_t i = 0; i < k_; ++i)
    answers[static_cast<std::size_t>(i)] = oracle.query(matrix.row(i)).matches;

  std::vector<Label> prediction(n, Label{1});
  std::vector<std::int64_t> scores(m), counts(m);
  for (std::size_t j = 0; j < t; ++j) {
    std::fill(scores.begin(), scores.end(), 0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int64_t i = 0; i < k_; ++i) {
      const std::uint32_t l = matrix.entry(i, j) - 1;
      scores[l] += answers[static_cast<std::size_t>(i)];
      counts[l] += 1;
    }
    Rng tie(substream(tie_key, j));
    prediction[j] = argmax_normalized(scores, counts, tie);
  }
  return LabelSequence(LabelSequence::Unchecked{}, std::move(prediction), m);
}

}  // namespace hamq
