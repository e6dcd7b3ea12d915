#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamq/bounds.hpp"
#include "hamq/core.hpp"
#include "hamq/featurespace.hpp"

namespace hamq {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AttackId { Small, Large, SmallUnknown, LargeUnknown, RandomBaseline };

AttackId parse_attack_id(const std::string& name);
std::string attack_id_name(AttackId id);
/// Unknown-features attacks run against a FeatureOracle, the rest against
/// a MatchOracle.
bool is_feature_model(AttackId id);

/// Hidden-labeling selector: uniform, a constant label (the adversarial
/// fixed case Theorem 2 testing needs), or an explicit sequence from file.
struct LabelingSpec {
  enum class Kind { Uniform, Constant, File };
  Kind kind = Kind::Uniform;
  Label constant = 1;
  std::string path;
};

/// Parses "uniform", "constant:L", or "file:PATH".
LabelingSpec parse_labeling(const std::string& text);

struct ExperimentConfig {
  AttackId attack = AttackId::Small;
  std::vector<std::int64_t> n_values{1000};
  std::vector<std::int64_t> m_values{2};
  std::vector<std::int64_t> k_values{1};
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  bool wrap_permutation = false;
  LabelingSpec labeling;
  std::optional<std::uint64_t> universe_size;  // feature model; default 4n
  std::optional<std::int64_t> force_t;
  /// Off by default so replays with one seed are byte-identical; wall time
  /// is measured only when requested.
  bool timing = false;
};

struct TrialRecord {
  std::int64_t n = 0, m = 0, k = 0;
  std::int64_t trial = 0;
  std::uint64_t seed = 0;
  std::int64_t acc_num = 0;  // matched positions; acc_den is always n
  std::int64_t acc_den = 1;
  std::int64_t queries = 0;
  std::optional<std::int64_t> t;  // realized prefix length, large attacks only
  std::int64_t ms = 0;

  double acc() const { return static_cast<double>(acc_num) / static_cast<double>(acc_den); }

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct PointSummary {
  std::int64_t n = 0, m = 0, k = 0;
  std::int64_t trials = 0;
  double mean = 0;
  double se = 0;
  BoundReport bounds;
  std::string bound_name;      // which guarantee this attack is held to
  double bound_checked = 0;    // its value at this grid point
  bool precondition_held = false;
  std::optional<std::int64_t> realized_t;
  std::optional<double> lower_large_realized;
  std::string verdict;  // PASS | FAIL | NONE (no applicable bound)
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  std::vector<PointSummary> grid;
  bool all_pass = true;  // no FAIL verdicts (NONE does not fail)
};

/// Runs the full sweep. Trials are embarrassingly parallel; the parallel
/// and serial paths produce identical results because every trial owns its
/// derived seed, oracle, and rng stream.
SweepResult run_sweep(const ExperimentConfig& cfg, bool parallel = true);

struct ReductionReport {
  ExperimentConfig config;
  std::int64_t trials = 0;
  double mean_wrapped = 0, se_wrapped = 0;
  double mean_plain = 0, se_plain = 0;
  double diff = 0;
  double combined_se = 0;
  bool pass = false;  // |diff| <= 4 * combined_se
};

/// Two-sample check of the worst-case-to-average-case reduction: the
/// wrapped attack on the fixed labeling vs the plain attack on uniform
/// labelings, equal trial counts per side.
ReductionReport verify_reduction(const ExperimentConfig& cfg, bool parallel = true);

void write_csv(const SweepResult& result, const std::string& path);
std::string csv_text(const SweepResult& result);
nlohmann::json summary_json(const SweepResult& result);
void write_summary_json(const SweepResult& result, const std::string& path);
nlohmann::json reduction_json(const ReductionReport& report);
nlohmann::json bound_report_json(const BoundReport& report);
std::string format_table(const SweepResult& result);

/// Zero queries, uniform random guess; accuracy 1/m in expectation.
class RandomBaselineAttack final : public Attack {
 public:
  LabelSequence run(Oracle& oracle, Rng& rng) const override {
    return sample_uniform_labels(oracle.n(), oracle.m(), rng);
  }
};

std::unique_ptr<Attack> make_sequence_attack(AttackId id, std::int64_t k,
                                             std::optional<std::int64_t> force_t);
std::unique_ptr<ClassifierAttack> make_feature_attack(AttackId id, std::int64_t k,
                                                      std::optional<std::int64_t> force_t);

/// n distinct ids uniform over [0, universe), in uniform random order.
std::vector<FeatureId> sample_distinct_ids(std::uint64_t universe, std::size_t n, Rng& rng);

}  // namespace hamq
