#include "hamq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "hamq/attack_large.hpp"
#include "hamq/attack_small.hpp"
#include "hamq/reduction.hpp"

namespace hamq {

namespace {

struct PointSpec {
  std::int64_t n = 0, m = 0, k = 0;
};

struct ResolvedLabeling {
  LabelingSpec::Kind kind = LabelingSpec::Kind::Uniform;
  Label constant = 1;
  std::vector<Label> file_labels;
};

ResolvedLabeling resolve_labeling(const LabelingSpec& spec) {
  ResolvedLabeling r;
  r.kind = spec.kind;
  r.constant = spec.constant;
  if (spec.kind == LabelingSpec::Kind::File) {
    std::ifstream in(spec.path);
    if (!in) throw ConfigError("cannot open labeling file: " + spec.path);
    std::int64_t v = 0;
    while (in >> v) {
      if (v < 1 || v > std::numeric_limits<Label>::max())
        throw ConfigError("label " + std::to_string(v) + " out of range in " + spec.path);
      r.file_labels.push_back(static_cast<Label>(v));
    }
    if (in.fail() && !in.eof()) throw ConfigError("unparsable labeling file: " + spec.path);
    if (r.file_labels.empty()) throw ConfigError("empty labeling file: " + spec.path);
  }
  return r;
}

std::string labeling_to_string(const LabelingSpec& spec) {
  switch (spec.kind) {
    case LabelingSpec::Kind::Uniform:
      return "uniform";
    case LabelingSpec::Kind::Constant:
      return "constant:" + std::to_string(spec.constant);
    case LabelingSpec::Kind::File:
      return "file:" + spec.path;
  }
  return "uniform";
}

void validate_point(const ExperimentConfig& cfg, const ResolvedLabeling& lab,
                    const PointSpec& p) {
  if (p.n < 1) throw ConfigError("n must be >= 1");
  if (p.m < 2 || p.m > std::numeric_limits<Label>::max())
    throw ConfigError("m must be in 2.." + std::to_string(std::numeric_limits<Label>::max()));
  if (cfg.attack == AttackId::RandomBaseline) {
    if (p.k < 0) throw ConfigError("k must be >= 0");
  } else if (p.k < 1) {
    throw ConfigError("k must be >= 1 for attack " + attack_id_name(cfg.attack));
  }
  if (cfg.attack == AttackId::Small && p.k > 1 && p.k - 1 > p.n)
    throw ConfigError("small attack needs k-1 <= n (got k=" + std::to_string(p.k) +
                      ", n=" + std::to_string(p.n) + ")");
  if (lab.kind == LabelingSpec::Kind::Constant && lab.constant > p.m)
    throw ConfigError("constant label exceeds m");
  if (lab.kind == LabelingSpec::Kind::File) {
    if (static_cast<std::int64_t>(lab.file_labels.size()) != p.n)
      throw ConfigError("labeling file holds " + std::to_string(lab.file_labels.size()) +
                        " labels but n=" + std::to_string(p.n));
    for (const Label v : lab.file_labels)
      if (v > p.m) throw ConfigError("labeling file entry exceeds m");
  }
  if (is_feature_model(cfg.attack)) {
    const std::uint64_t universe =
        cfg.universe_size.value_or(4 * static_cast<std::uint64_t>(p.n));
    if (universe < static_cast<std::uint64_t>(p.n))
      throw ConfigError("universe size must be at least n");
  }
  if (cfg.force_t && *cfg.force_t < 1) throw ConfigError("force-t must be >= 1");
}

void validate_config(const ExperimentConfig& cfg, const ResolvedLabeling& lab) {
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.n_values.empty() || cfg.m_values.empty() || cfg.k_values.empty())
    throw ConfigError("sweep lists must be non-empty");
  for (const std::int64_t n : cfg.n_values)
    for (const std::int64_t m : cfg.m_values)
      for (const std::int64_t k : cfg.k_values) validate_point(cfg, lab, {n, m, k});
}

std::vector<Label> make_hidden_labels(const ResolvedLabeling& lab, std::int64_t n,
                                      std::int64_t m, Rng& rng) {
  std::vector<Label> out(static_cast<std::size_t>(n));
  switch (lab.kind) {
    case LabelingSpec::Kind::Uniform:
      for (auto& v : out) v = static_cast<Label>(1 + rng.below(static_cast<std::uint64_t>(m)));
      break;
    case LabelingSpec::Kind::Constant:
      std::fill(out.begin(), out.end(), lab.constant);
      break;
    case LabelingSpec::Kind::File:
      out = lab.file_labels;
      break;
  }
  return out;
}

std::optional<std::int64_t> realized_prefix(const ExperimentConfig& cfg, const PointSpec& p) {
  if (cfg.attack != AttackId::Large && cfg.attack != AttackId::LargeUnknown) return std::nullopt;
  if (cfg.force_t)
    return std::min<std::int64_t>(std::max<std::int64_t>(*cfg.force_t, 1), p.n);
  return static_cast<std::int64_t>(choose_t(static_cast<std::size_t>(p.n),
                                            static_cast<std::uint32_t>(p.m), p.k));
}

std::int64_t query_budget(AttackId id, std::int64_t k) {
  return id == AttackId::RandomBaseline ? 0 : k;
}

/// One Monte Carlo trial. Everything is derived from the trial seed: the
/// hidden labeling comes from one substream, the attack from another.
TrialRecord execute_trial(const ExperimentConfig& cfg, const ResolvedLabeling& lab,
                          const PointSpec& p, std::uint64_t grid_index, std::int64_t trial,
                          const Attack* seq_attack, const ClassifierAttack* feat_attack,
                          std::optional<std::int64_t> point_t) {
  TrialRecord rec;
  rec.n = p.n;
  rec.m = p.m;
  rec.k = p.k;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.master_seed, grid_index, static_cast<std::uint64_t>(trial));
  rec.t = point_t;

  Rng root(rec.seed);
  Rng env(root.next());
  Rng att(root.next());

  const auto started = cfg.timing ? std::chrono::steady_clock::now()
                                  : std::chrono::steady_clock::time_point{};

  const std::uint32_t m = static_cast<std::uint32_t>(p.m);
  if (seq_attack != nullptr) {
    LabelSequence hidden(LabelSequence::Unchecked{}, make_hidden_labels(lab, p.n, p.m, env), m);
    MatchOracle oracle(std::move(hidden), query_budget(cfg.attack, p.k));
    const LabelSequence estimate = seq_attack->run(oracle, att);
    const Ratio acc = oracle.final_accuracy(estimate);
    rec.acc_num = acc.num;
    rec.acc_den = acc.den;
    rec.queries = oracle.queries_used();
  } else {
    const std::uint64_t universe =
        cfg.universe_size.value_or(4 * static_cast<std::uint64_t>(p.n));
    std::vector<FeatureId> ids =
        sample_distinct_ids(universe, static_cast<std::size_t>(p.n), env);
    FeatureOracle oracle(universe, std::move(ids), make_hidden_labels(lab, p.n, p.m, env), m,
                         query_budget(cfg.attack, p.k));
    const std::shared_ptr<const Classifier> estimate = feat_attack->run(oracle, att);
    const Ratio acc = oracle.final_accuracy(*estimate);
    rec.acc_num = acc.num;
    rec.acc_den = acc.den;
    rec.queries = oracle.queries_used();
  }

  if (cfg.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return rec;
}

/// Runs all trials of one grid point into records[first..first+trials).
/// Any trial failure aborts the sweep with its derived seed reported.
void run_point(const ExperimentConfig& cfg, const ResolvedLabeling& lab, const PointSpec& p,
               std::uint64_t grid_index, std::vector<TrialRecord>& records, std::size_t first,
               bool parallel) {
  std::unique_ptr<Attack> seq;
  std::unique_ptr<ClassifierAttack> feat;
  if (is_feature_model(cfg.attack)) {
    feat = make_feature_attack(cfg.attack, p.k, cfg.force_t);
    if (cfg.wrap_permutation) feat = wrap_attack_features(std::move(feat));
  } else {
    seq = make_sequence_attack(cfg.attack, p.k, cfg.force_t);
    if (cfg.wrap_permutation) seq = wrap_attack(std::move(seq));
  }
  const std::optional<std::int64_t> point_t = realized_prefix(cfg, p);

  const std::int64_t trials = cfg.trials;
  bool failed = false;
  std::string failure;

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    try {
      records[first + static_cast<std::size_t>(trial)] =
          execute_trial(cfg, lab, p, grid_index, trial, seq.get(), feat.get(), point_t);
    } catch (const std::exception& e) {
#pragma omp critical
      if (!failed) {
        failed = true;
        failure = "trial with derived seed " +
                  std::to_string(derive_seed(cfg.master_seed, grid_index,
                                             static_cast<std::uint64_t>(trial))) +
                  " failed: " + e.what();
      }
    }
  }
  if (failed) throw ConfigError(failure);
}

struct MeanSe {
  double mean = 0;
  double se = 0;
};

MeanSe mean_and_se(const TrialRecord* recs, std::int64_t trials) {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < trials; ++i) total += recs[i].acc_num;
  const double den = static_cast<double>(recs[0].acc_den);
  const double mean = static_cast<double>(total) / (den * static_cast<double>(trials));
  double ss = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const double d = recs[i].acc() - mean;
    ss += d * d;
  }
  const double sd = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
  return {mean, sd / std::sqrt(static_cast<double>(trials))};
}

PointSummary summarize_point(const ExperimentConfig& cfg, const PointSpec& p,
                             const TrialRecord* recs, std::int64_t trials) {
  PointSummary s;
  s.n = p.n;
  s.m = p.m;
  s.k = p.k;
  s.trials = trials;
  const MeanSe ms = mean_and_se(recs, trials);
  s.mean = ms.mean;
  s.se = ms.se;
  s.bounds = make_bound_report(p.n, static_cast<std::uint32_t>(p.m), p.k);
  s.realized_t = realized_prefix(cfg, p);
  if (s.realized_t)
    s.lower_large_realized =
        bound_large_realized(p.n, static_cast<std::uint32_t>(p.m), *s.realized_t);

  // Theorem guarantees speak about uniform hidden labels; a wrapped attack
  // carries them to any fixed labeling. Otherwise no bound is asserted.
  const bool labeling_ok =
      cfg.labeling.kind == LabelingSpec::Kind::Uniform || cfg.wrap_permutation;

  const double tol = 4.0 * s.se;
  switch (cfg.attack) {
    case AttackId::Small:
      s.bound_name = "small";
      s.bound_checked = s.bounds.lower_small;
      s.precondition_held = s.bounds.small_applicable && labeling_ok;
      break;
    case AttackId::Large:
      s.bound_name = "large";
      s.bound_checked = s.bounds.lower_large;
      s.precondition_held = s.bounds.large_applicable && labeling_ok;
      break;
    case AttackId::SmallUnknown:
      s.bound_name = "small-unknown";
      s.bound_checked = bound_small_unknown(p.n, static_cast<std::uint32_t>(p.m), p.k);
      s.precondition_held = s.bounds.small_applicable && labeling_ok;
      break;
    case AttackId::LargeUnknown:
      s.bound_name = "large-unknown";
      s.bound_checked = bound_large_unknown(p.n, static_cast<std::uint32_t>(p.m), p.k);
      s.precondition_held = s.bounds.large_applicable && labeling_ok;
      break;
    case AttackId::RandomBaseline:
      s.bound_name = "baseline";
      s.bound_checked = s.bounds.baseline;
      s.precondition_held = true;
      s.verdict = std::abs(s.mean - s.bound_checked) <= tol ? "PASS" : "FAIL";
      return s;
  }
  if (!s.precondition_held)
    s.verdict = "NONE";
  else
    s.verdict = s.mean >= s.bound_checked - tol ? "PASS" : "FAIL";
  return s;
}

}  // namespace

AttackId parse_attack_id(const std::string& name) {
  if (name == "small") return AttackId::Small;
  if (name == "large") return AttackId::Large;
  if (name == "small-unknown") return AttackId::SmallUnknown;
  if (name == "large-unknown") return AttackId::LargeUnknown;
  if (name == "random-baseline") return AttackId::RandomBaseline;
  throw ConfigError("unknown attack id: " + name);
}

std::string attack_id_name(AttackId id) {
  switch (id) {
    case AttackId::Small:
      return "small";
    case AttackId::Large:
      return "large";
    case AttackId::SmallUnknown:
      return "small-unknown";
    case AttackId::LargeUnknown:
      return "large-unknown";
    case AttackId::RandomBaseline:
      return "random-baseline";
  }
  return "?";
}

bool is_feature_model(AttackId id) {
  return id == AttackId::SmallUnknown || id == AttackId::LargeUnknown;
}

LabelingSpec parse_labeling(const std::string& text) {
  LabelingSpec spec;
  if (text == "uniform") {
    spec.kind = LabelingSpec::Kind::Uniform;
    return spec;
  }
  if (text.rfind("constant:", 0) == 0) {
    spec.kind = LabelingSpec::Kind::Constant;
    const std::string num = text.substr(9);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(num, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad constant labeling: " + text);
    }
    if (pos != num.size() || v < 1 || v > std::numeric_limits<Label>::max())
      throw ConfigError("bad constant labeling: " + text);
    spec.constant = static_cast<Label>(v);
    return spec;
  }
  if (text.rfind("file:", 0) == 0) {
    spec.kind = LabelingSpec::Kind::File;
    spec.path = text.substr(5);
    if (spec.path.empty()) throw ConfigError("empty labeling file path");
    return spec;
  }
  throw ConfigError("labeling must be uniform, constant:L, or file:PATH");
}

std::unique_ptr<Attack> make_sequence_attack(AttackId id, std::int64_t k,
                                             std::optional<std::int64_t> force_t) {
  switch (id) {
    case AttackId::Small:
      return std::make_unique<SmallKAttack>(k);
    case AttackId::Large:
      return std::make_unique<LargeKAttack>(
          k, force_t ? std::optional<std::size_t>(
                           static_cast<std::size_t>(std::max<std::int64_t>(*force_t, 1)))
                     : std::nullopt);
    case AttackId::RandomBaseline:
      return std::make_unique<RandomBaselineAttack>();
    default:
      throw ConfigError(attack_id_name(id) + " is not a sequence-model attack");
  }
}

std::unique_ptr<ClassifierAttack> make_feature_attack(AttackId id, std::int64_t k,
                                                      std::optional<std::int64_t> force_t) {
  switch (id) {
    case AttackId::SmallUnknown:
      return std::make_unique<SmallUnknownAttack>(k);
    case AttackId::LargeUnknown:
      return std::make_unique<LargeUnknownAttack>(
          k, force_t ? std::optional<std::size_t>(
                           static_cast<std::size_t>(std::max<std::int64_t>(*force_t, 1)))
                     : std::nullopt);
    default:
      throw ConfigError(attack_id_name(id) + " is not a feature-model attack");
  }
}

std::vector<FeatureId> sample_distinct_ids(std::uint64_t universe, std::size_t n, Rng& rng) {
  if (n == 0) throw ParamError("need n >= 1 ids");
  if (universe < n) throw ParamError("universe smaller than n");
  // Floyd's sampling gives a uniform n-subset; the final shuffle makes the
  // order uniform as well.
  std::unordered_set<FeatureId> chosen;
  std::vector<FeatureId> out;
  out.reserve(n);
  for (std::uint64_t j = universe - n; j < universe; ++j) {
    const std::uint64_t r = rng.below(j + 1);
    const FeatureId id = chosen.count(r) ? j : r;
    chosen.insert(id);
    out.push_back(id);
  }
  for (std::size_t i = out.size() - 1; i > 0; --i)
    std::swap(out[i], out[rng.below(i + 1)]);
  return out;
}

SweepResult run_sweep(const ExperimentConfig& cfg, bool parallel) {
  const ResolvedLabeling lab = resolve_labeling(cfg.labeling);
  validate_config(cfg, lab);

  SweepResult result;
  result.config = cfg;

  std::vector<PointSpec> grid;
  for (const std::int64_t n : cfg.n_values)
    for (const std::int64_t m : cfg.m_values)
      for (const std::int64_t k : cfg.k_values) grid.push_back({n, m, k});

  result.records.resize(grid.size() * static_cast<std::size_t>(cfg.trials));
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const std::size_t first = gi * static_cast<std::size_t>(cfg.trials);
    run_point(cfg, lab, grid[gi], gi, result.records, first, parallel);
    result.grid.push_back(
        summarize_point(cfg, grid[gi], result.records.data() + first, cfg.trials));
    if (result.grid.back().verdict == "FAIL") result.all_pass = false;
  }
  return result;
}

ReductionReport verify_reduction(const ExperimentConfig& cfg, bool parallel) {
  if (cfg.n_values.size() != 1 || cfg.m_values.size() != 1 || cfg.k_values.size() != 1)
    throw ConfigError("verify-reduction needs scalar n, m, k");
  if (cfg.labeling.kind == LabelingSpec::Kind::Uniform)
    throw ConfigError("verify-reduction needs a fixed labeling (constant:L or file:PATH)");
  const ResolvedLabeling fixed = resolve_labeling(cfg.labeling);
  validate_config(cfg, fixed);

  const PointSpec p{cfg.n_values[0], cfg.m_values[0], cfg.k_values[0]};

  // Side 0: wrapped attack on the fixed labeling. Side 1: plain attack on
  // uniform labelings. Theorem guarantees equal expectations.
  ExperimentConfig wrapped_cfg = cfg;
  wrapped_cfg.wrap_permutation = true;
  ExperimentConfig plain_cfg = cfg;
  plain_cfg.wrap_permutation = false;
  plain_cfg.labeling = LabelingSpec{};  // uniform
  const ResolvedLabeling uniform;

  std::vector<TrialRecord> wrapped(static_cast<std::size_t>(cfg.trials));
  std::vector<TrialRecord> plain(static_cast<std::size_t>(cfg.trials));
  run_point(wrapped_cfg, fixed, p, 0, wrapped, 0, parallel);
  run_point(plain_cfg, uniform, p, 1, plain, 0, parallel);

  ReductionReport rep;
  rep.config = cfg;
  rep.trials = cfg.trials;
  const MeanSe w = mean_and_se(wrapped.data(), cfg.trials);
  const MeanSe u = mean_and_se(plain.data(), cfg.trials);
  rep.mean_wrapped = w.mean;
  rep.se_wrapped = w.se;
  rep.mean_plain = u.mean;
  rep.se_plain = u.se;
  rep.diff = w.mean - u.mean;
  rep.combined_se = std::sqrt(w.se * w.se + u.se * u.se);
  rep.pass = std::abs(rep.diff) <= 4.0 * rep.combined_se;
  return rep;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_text(const SweepResult& result) {
  std::string out = "attack,n,m,k,trial,seed,acc_num,acc_den,acc_float,queries,t,ms\n";
  const std::string attack = attack_id_name(result.config.attack);
  char buf[256];
  for (const TrialRecord& r : result.records) {
    const std::string t_field = r.t ? std::to_string(*r.t) : std::string();
    std::snprintf(buf, sizeof buf, "%s,%lld,%lld,%lld,%lld,%llu,%lld,%lld,%s,%lld,%s,%lld\n",
                  attack.c_str(), static_cast<long long>(r.n), static_cast<long long>(r.m),
                  static_cast<long long>(r.k), static_cast<long long>(r.trial),
                  static_cast<unsigned long long>(r.seed), static_cast<long long>(r.acc_num),
                  static_cast<long long>(r.acc_den), fmt_double(r.acc()).c_str(),
                  static_cast<long long>(r.queries), t_field.c_str(),
                  static_cast<long long>(r.ms));
    out += buf;
  }
  return out;
}

void write_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << csv_text(result);
  if (!out) throw IoError("write failed: " + path);
}

nlohmann::json bound_report_json(const BoundReport& r) {
  return nlohmann::json{{"n", r.n},
                        {"m", r.m},
                        {"k", r.k},
                        {"baseline", r.baseline},
                        {"lower_small", r.lower_small},
                        {"small_applicable", r.small_applicable},
                        {"lower_large", r.lower_large},
                        {"large_applicable", r.large_applicable},
                        {"upper_k1", r.upper_k1},
                        {"upper_k1_applicable", r.upper_k1_applicable},
                        {"ffh_envelope", r.ffh_envelope}};
}

namespace {

nlohmann::json config_json(const ExperimentConfig& cfg) {
  nlohmann::json j{{"attack", attack_id_name(cfg.attack)},
                   {"n", cfg.n_values},
                   {"m", cfg.m_values},
                   {"k", cfg.k_values},
                   {"trials", cfg.trials},
                   {"seed", cfg.master_seed},
                   {"wrap_permutation", cfg.wrap_permutation},
                   {"labeling", labeling_to_string(cfg.labeling)},
                   {"timing", cfg.timing}};
  j["universe_size"] = cfg.universe_size ? nlohmann::json(*cfg.universe_size)
                                         : nlohmann::json(nullptr);
  j["force_t"] = cfg.force_t ? nlohmann::json(*cfg.force_t) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

nlohmann::json summary_json(const SweepResult& result) {
  nlohmann::json grid = nlohmann::json::array();
  for (const PointSummary& s : result.grid) {
    nlohmann::json j{{"n", s.n},
                     {"m", s.m},
                     {"k", s.k},
                     {"trials", s.trials},
                     {"mean", s.mean},
                     {"se", s.se},
                     {"bound_name", s.bound_name},
                     {"bound_checked", s.bound_checked},
                     {"precondition_held", s.precondition_held},
                     {"verdict", s.verdict},
                     {"bounds", bound_report_json(s.bounds)}};
    j["realized_t"] = s.realized_t ? nlohmann::json(*s.realized_t) : nlohmann::json(nullptr);
    j["lower_large_realized"] = s.lower_large_realized
                                    ? nlohmann::json(*s.lower_large_realized)
                                    : nlohmann::json(nullptr);
    grid.push_back(std::move(j));
  }
  return nlohmann::json{{"schema", "hamming-overfit/1"},
                        {"config", config_json(result.config)},
                        {"tolerance_policy", "4se"},
                        {"grid", std::move(grid)},
                        {"all_pass", result.all_pass}};
}

void write_summary_json(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << summary_json(result).dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

nlohmann::json reduction_json(const ReductionReport& rep) {
  return nlohmann::json{{"schema", "hamming-overfit/1"},
                        {"config", config_json(rep.config)},
                        {"tolerance_policy", "4se"},
                        {"trials_per_side", rep.trials},
                        {"mean_wrapped", rep.mean_wrapped},
                        {"se_wrapped", rep.se_wrapped},
                        {"mean_plain", rep.mean_plain},
                        {"se_plain", rep.se_plain},
                        {"diff", rep.diff},
                        {"combined_se", rep.combined_se},
                        {"verdict", rep.pass ? "PASS" : "FAIL"}};
}

std::string format_table(const SweepResult& result) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-16s %8s %5s %6s %8s %12s %12s %12s  %s\n", "attack", "n",
                "m", "k", "trials", "mean", "se", "bound", "verdict");
  out += buf;
  const std::string attack = attack_id_name(result.config.attack);
  for (const PointSummary& s : result.grid) {
    std::snprintf(buf, sizeof buf, "%-16s %8lld %5lld %6lld %8lld %12.6f %12.2e %12.6f  %s\n",
                  attack.c_str(), static_cast<long long>(s.n), static_cast<long long>(s.m),
                  static_cast<long long>(s.k), static_cast<long long>(s.trials), s.mean, s.se,
                  s.bound_checked, s.verdict.c_str());
    out += buf;
  }
  return out;
}

}  // namespace hamq
