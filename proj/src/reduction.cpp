#include "hamq/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hamq {

PermutationBundle::PermutationBundle(std::vector<Label> table, std::size_t n, std::uint32_t m)
    : table_(std::move(table)), n_(n), m_(m) {
  if (n == 0 || m < 2) throw ParamError("bundle needs n >= 1 and m >= 2");
  if (table_.size() != n * m) throw ShapeError("bundle table size is not n*m");
  std::vector<bool> seen(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t v = 0; v < m; ++v) {
      const Label img = table_[i * m + v];
      if (img < 1 || img > m || seen[img - 1])
        throw ShapeError("coordinate " + std::to_string(i) + " is not a bijection of 1..m");
      seen[img - 1] = true;
    }
  }
}

PermutationBundle PermutationBundle::identity(std::size_t n, std::uint32_t m) {
  if (n == 0 || m < 2) throw ParamError("bundle needs n >= 1 and m >= 2");
  std::vector<Label> table(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t v = 0; v < m; ++v) table[i * m + v] = static_cast<Label>(v + 1);
  return PermutationBundle(Unchecked{}, std::move(table), n, m);
}

PermutationBundle PermutationBundle::sample(std::size_t n, std::uint32_t m, Rng& rng) {
  if (n == 0 || m < 2) throw ParamError("bundle needs n >= 1 and m >= 2");
  std::vector<Label> table(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    Label* row = table.data() + i * m;
    for (std::uint32_t v = 0; v < m; ++v) row[v] = static_cast<Label>(v + 1);
    for (std::uint32_t j = m - 1; j > 0; --j)
      std::swap(row[j], row[rng.below(j + 1)]);
  }
  return PermutationBundle(Unchecked{}, std::move(table), n, m);
}

PermutationBundle PermutationBundle::inverse() const {
  std::vector<Label> inv(n_ * m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::uint32_t v = 0; v < m_; ++v)
      inv[i * m_ + table_[i * m_ + v] - 1] = static_cast<Label>(v + 1);
  return PermutationBundle(Unchecked{}, std::move(inv), n_, m_);
}

LabelSequence PermutationBundle::apply(const LabelSequence& z) const {
  if (z.n() != n_ || z.m() != m_) throw ShapeError("bundle and sequence shapes differ");
  std::vector<Label> out(n_);
  const Label* in = z.labels().data();
  for (std::size_t i = 0; i < n_; ++i) out[i] = table_[i * m_ + in[i] - 1];
  return LabelSequence(LabelSequence::Unchecked{}, std::move(out), m_);
}

PermutationBundle sample_bundle(std::size_t n, std::uint32_t m, Rng& rng) {
  return PermutationBundle::sample(n, m, rng);
}

LabelSequence apply_bundle(const PermutationBundle& b, const LabelSequence& z) {
  return b.apply(z);
}

PermutedOracle::PermutedOracle(Oracle& inner, const PermutationBundle& bundle)
    : inner_(inner), bundle_(bundle) {
  if (bundle.n() != inner.n() || bundle.m() != inner.m())
    throw ShapeError("bundle shape does not match oracle shape");
}

PermutationWrappedAttack::PermutationWrappedAttack(std::unique_ptr<Attack> inner,
                                                   std::optional<PermutationBundle> forced)
    : inner_(std::move(inner)), forced_(std::move(forced)) {
  if (!inner_) throw ParamError("wrapped attack needs an inner attack");
}

LabelSequence PermutationWrappedAttack::run(Oracle& oracle, Rng& rng) const {
  // The bundle is fixed for the whole interaction; a forced bundle skips
  // sampling so the rng stream lines up with an unwrapped run.
  const PermutationBundle bundle =
      forced_ ? *forced_ : PermutationBundle::sample(oracle.n(), oracle.m(), rng);
  PermutedOracle view(oracle, bundle);
  const LabelSequence inner_estimate = inner_->run(view, rng);
  return bundle.apply(inner_estimate);
}

std::unique_ptr<Attack> wrap_attack(std::unique_ptr<Attack> inner,
                                    std::optional<PermutationBundle> forced) {
  return std::make_unique<PermutationWrappedAttack>(std::move(inner), std::move(forced));
}

}  // namespace hamq
