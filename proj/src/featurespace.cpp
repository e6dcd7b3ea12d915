#include "hamq/featurespace.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hamq/attack_large.hpp"

namespace hamq {

namespace {

class ConstantClassifier final : public Classifier {
 public:
  explicit ConstantClassifier(Label v) : v_(v) {}
  Label at(FeatureId) const override { return v_; }

 private:
  Label v_;
};

class FnClassifier final : public Classifier {
 public:
  explicit FnClassifier(std::function<Label(FeatureId)> fn) : fn_(std::move(fn)) {}
  Label at(FeatureId x) const override { return fn_(x); }

 private:
  std::function<Label(FeatureId)> fn_;
};

}  // namespace

std::shared_ptr<const Classifier> make_constant_classifier(Label value) {
  return std::make_shared<ConstantClassifier>(value);
}

std::shared_ptr<const Classifier> make_classifier(std::function<Label(FeatureId)> fn) {
  return std::make_shared<FnClassifier>(std::move(fn));
}

FeatureOracle::FeatureOracle(std::uint64_t universe_size, std::vector<FeatureId> test_ids,
                             std::vector<Label> test_labels, std::uint32_t m,
                             std::optional<std::int64_t> budget)
    : universe_(universe_size),
      ids_(std::move(test_ids)),
      labels_(std::move(test_labels)),
      m_(m),
      budget_(budget) {
  if (m_ < 2) throw ParamError("feature oracle needs m >= 2");
  if (ids_.empty()) throw ParamError("feature oracle needs n >= 1 test ids");
  if (ids_.size() != labels_.size()) throw ShapeError("test ids and labels differ in length");
  if (universe_ < ids_.size()) throw ParamError("universe smaller than the test set");
  if (budget_ && *budget_ < 0) throw ParamError("query budget must be non-negative");
  std::unordered_set<FeatureId> seen(ids_.begin(), ids_.end());
  if (seen.size() != ids_.size()) throw ParamError("test feature ids must be distinct");
  for (const FeatureId x : ids_)
    if (x >= universe_) throw ParamError("test id outside the universe");
  for (const Label v : labels_)
    if (v < 1 || v > m_) throw ShapeError("hidden label outside 1..m");
}

std::int64_t FeatureOracle::evaluate(const Classifier& f, std::vector<Label>* out) const {
  std::int64_t matches = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const Label v = f.at(ids_[i]);
    if (v < 1 || v > m_)
      throw ShapeError("classifier produced label " + std::to_string(v) + " outside 1..m");
    matches += (v == labels_[i]);
    if (out) out->push_back(v);
  }
  return matches;
}

MatchResult FeatureOracle::query(const Classifier& f) {
  if (budget_ && used_ >= *budget_)
    throw BudgetError("query budget of " + std::to_string(*budget_) + " exhausted");
  std::vector<Label> evaluated;
  const std::int64_t matches = evaluate(f, record_ ? &evaluated : nullptr);
  const MatchResult r{matches, static_cast<std::int64_t>(ids_.size())};
  ++used_;
  if (record_) {
    te_.push_back(std::move(evaluated));
    ta_.push_back(r);
  }
  return r;
}

Ratio FeatureOracle::final_accuracy(const Classifier& fhat) const {
  return Ratio{evaluate(fhat, nullptr), static_cast<std::int64_t>(ids_.size())};
}

std::vector<Label> FeaturePermuter::perm(FeatureId x) const {
  std::vector<Label> p(m);
  for (std::uint32_t v = 0; v < m; ++v) p[v] = static_cast<Label>(v + 1);
  if (!identity) {
    Rng rng(substream(key, x));
    for (std::uint32_t j = m - 1; j > 0; --j) std::swap(p[j], p[rng.below(j + 1)]);
  }
  return p;
}

Label FeaturePermuter::map(FeatureId x, Label v) const {
  if (identity) return v;
  return perm(x)[v - 1];
}

Label FeaturePermuter::inverse_map(FeatureId x, Label v) const {
  if (identity) return v;
  const std::vector<Label> p = perm(x);
  for (std::uint32_t u = 0; u < m; ++u)
    if (p[u] == v) return static_cast<Label>(u + 1);
  throw ShapeError("label outside the permutation's range");
}

namespace {

/// pi(f): x -> pi_x(f(x)). Borrows f for the duration of one query.
class ComposedRef final : public Classifier {
 public:
  ComposedRef(const Classifier& f, const FeaturePermuter& p) : f_(f), p_(p) {}
  Label at(FeatureId x) const override { return p_.map(x, f_.at(x)); }

 private:
  const Classifier& f_;
  const FeaturePermuter& p_;
};

/// Owning variant for the final output, which outlives the run.
class ComposedOwned final : public Classifier {
 public:
  ComposedOwned(std::shared_ptr<const Classifier> f, FeaturePermuter p)
      : f_(std::move(f)), p_(p) {}
  Label at(FeatureId x) const override { return p_.map(x, f_->at(x)); }

 private:
  std::shared_ptr<const Classifier> f_;
  FeaturePermuter p_;
};

class PermutedClassifierOracle final : public ClassifierOracle {
 public:
  PermutedClassifierOracle(ClassifierOracle& inner, const FeaturePermuter& p)
      : inner_(inner), p_(p) {}

  std::size_t n() const override { return inner_.n(); }
  std::uint32_t m() const override { return inner_.m(); }
  std::uint64_t universe_size() const override { return inner_.universe_size(); }
  MatchResult query(const Classifier& f) override {
    const ComposedRef wrapped(f, p_);
    return inner_.query(wrapped);
  }
  std::int64_t queries_used() const override { return inner_.queries_used(); }
  std::optional<std::int64_t> budget() const override { return inner_.budget(); }

 private:
  ClassifierOracle& inner_;
  const FeaturePermuter& p_;
};

}  // namespace

FeaturePermutationWrappedAttack::FeaturePermutationWrappedAttack(
    std::unique_ptr<ClassifierAttack> inner, bool identity_hook)
    : inner_(std::move(inner)), identity_(identity_hook) {
  if (!inner_) throw ParamError("wrapped attack needs an inner attack");
}

std::shared_ptr<const Classifier> FeaturePermutationWrappedAttack::run(ClassifierOracle& oracle,
                                                                       Rng& rng) const {
  FeaturePermuter permuter;
  permuter.m = oracle.m();
  permuter.identity = identity_;
  if (!identity_) permuter.key = rng.next();
  PermutedClassifierOracle view(oracle, permuter);
  std::shared_ptr<const Classifier> inner_final = inner_->run(view, rng);
  return std::make_shared<ComposedOwned>(std::move(inner_final), permuter);
}

std::unique_ptr<ClassifierAttack> wrap_attack_features(std::unique_ptr<ClassifierAttack> inner,
                                                       bool identity_hook) {
  return std::make_unique<FeaturePermutationWrappedAttack>(std::move(inner), identity_hook);
}

std::uint32_t block_hash(std::uint64_t key, FeatureId x, std::uint32_t num_blocks) {
  if (num_blocks == 0) throw ParamError("block_hash needs at least one block");
  Rng rng(substream(key, x));
  return static_cast<std::uint32_t>(rng.below(num_blocks));
}

bool subset_member(std::uint64_t key, FeatureId x, std::uint64_t t, std::uint64_t n) {
  if (n == 0) throw ParamError("subset_member needs n >= 1");
  Rng rng(substream(key, x));
  return rng.below(n) < t;
}

SmallUnknownAttack::SmallUnknownAttack(std::int64_t k,
                                       std::function<std::uint32_t(FeatureId)> block_override)
    : k_(k), block_override_(std::move(block_override)) {
  if (k < 1) throw ParamError("small attack needs k >= 1");
}

std::shared_ptr<const Classifier> SmallUnknownAttack::run(ClassifierOracle& oracle,
                                                          Rng& rng) const {
  const std::uint32_t m = oracle.m();

  if (k_ == 1) {
    const MatchResult r = oracle.query(*make_constant_classifier(1));
    const bool ones = r.matches * static_cast<std::int64_t>(m) >= r.n;
    return make_constant_classifier(ones ? Label{1} : Label{2});
  }

  const std::uint32_t num_blocks = static_cast<std::uint32_t>(k_ - 1);
  const std::uint64_t run_key = rng.next();
  auto block_of = [this, run_key, num_blocks](FeatureId x) {
    return block_override_ ? block_override_(x) : block_hash(run_key, x, num_blocks);
  };

  std::vector<std::int64_t> answers;
  answers.reserve(static_cast<std::size_t>(k_));
  for (std::int64_t i = 0; i < k_; ++i) {
    // 0-based query i covers blocks 0..i-1 with label 1, the rest with 2.
    const FnClassifier q([&block_of, i](FeatureId x) {
      return static_cast<std::int64_t>(block_of(x)) < i ? Label{1} : Label{2};
    });
    answers.push_back(oracle.query(q).matches);
  }

  std::vector<Label> votes(num_blocks);
  for (std::uint32_t b = 0; b < num_blocks; ++b)
    votes[b] = answers[b + 1] >= answers[b] ? Label{1} : Label{2};

  return make_classifier(
      [block_of, votes = std::move(votes)](FeatureId x) { return votes[block_of(x)]; });
}

namespace {

/// Per-run state of the large-k unknown attack, shared by its query and
/// final classifiers. Confined to a single run, which is single-threaded.
struct LargeRunState {
  std::uint64_t member_key = 0;
  std::uint64_t column_key = 0;
  std::uint64_t tie_key = 0;
  std::int64_t k = 0;
  std::uint32_t m = 0;
  std::size_t t = 0;
  std::uint64_t n = 0;
  LargeUnknownHook hook;
  mutable std::unordered_map<FeatureId, std::vector<Label>> columns;

  bool member(FeatureId x) const {
    if (hook.member) return hook.member(x);
    return subset_member(member_key, x, t, n);
  }

  const std::vector<Label>& column(FeatureId x) const {
    auto it = columns.find(x);
    if (it != columns.end()) return it->second;
    std::vector<Label> col;
    if (hook.column) {
      col = hook.column(x);
    } else {
      Rng rng(substream(column_key, x));
      col = balanced_column(k, m, rng);
    }
    return columns.emplace(x, std::move(col)).first->second;
  }
};

class LargeQueryClassifier final : public Classifier {
 public:
  LargeQueryClassifier(std::shared_ptr<const LargeRunState> st, std::int64_t i)
      : st_(std::move(st)), i_(static_cast<std::size_t>(i)) {}
  Label at(FeatureId x) const override {
    if (!st_->member(x)) return 1;
    return st_->column(x)[i_];
  }

 private:
  std::shared_ptr<const LargeRunState> st_;
  std::size_t i_;
};

class LargeFinalClassifier final : public Classifier {
 public:
  LargeFinalClassifier(std::shared_ptr<const LargeRunState> st, std::vector<std::int64_t> answers)
      : st_(std::move(st)), answers_(std::move(answers)) {}

  Label at(FeatureId x) const override {
    if (!st_->member(x)) return 1;
    auto it = decoded_.find(x);
    if (it != decoded_.end()) return it->second;
    const std::vector<Label>& col = st_->column(x);
    std::vector<std::int64_t> scores(st_->m, 0), counts(st_->m, 0);
    for (std::size_t i = 0; i < col.size(); ++i) {
      const std::uint32_t l = col[i] - 1;
      scores[l] += answers_[i];
      counts[l] += 1;
    }
    const std::uint64_t tie_key = st_->hook.tie_key ? *st_->hook.tie_key : st_->tie_key;
    Rng tie(substream(tie_key, x));
    const Label v = argmax_normalized(scores, counts, tie);
    decoded_.emplace(x, v);
    return v;
  }

 private:
  std::shared_ptr<const LargeRunState> st_;
  std::vector<std::int64_t> answers_;
  mutable std::unordered_map<FeatureId, Label> decoded_;
};

}  // namespace

LargeUnknownAttack::LargeUnknownAttack(std::int64_t k, std::optional<std::size_t> forced_t,
                                       LargeUnknownHook hook)
    : k_(k), forced_t_(forced_t), hook_(std::move(hook)) {
  if (k < 1) throw ParamError("large attack needs k >= 1");
}

std::shared_ptr<const Classifier> LargeUnknownAttack::run(ClassifierOracle& oracle,
                                                          Rng& rng) const {
  auto st = std::make_shared<LargeRunState>();
  st->k = k_;
  st->m = oracle.m();
  st->n = oracle.n();
  st->t = forced_t_ ? std::min(std::max<std::size_t>(*forced_t_, 1), oracle.n())
                    : choose_t(oracle.n(), oracle.m(), k_);
  st->member_key = rng.next();
  st->column_key = rng.next();
  st->tie_key = rng.next();
  st->hook = hook_;

  std::vector<std::int64_t> answers(static_cast<std::size_t>(k_));
  for (std::int64_t i = 0; i < k_; ++i)
    answers[static_cast<std::size_t>(i)] = oracle.query(LargeQueryClassifier(st, i)).matches;

  return std::make_shared<LargeFinalClassifier>(std::move(st), std::move(answers));
}

}  // namespace hamq
