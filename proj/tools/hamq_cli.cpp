#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamq/attack_small.hpp"
#include "hamq/bounds.hpp"
#include "hamq/harness.hpp"

namespace {

struct CommonArgs {
  std::string attack = "small";
  std::vector<std::int64_t> n{1000};
  std::vector<std::int64_t> m{2};
  std::vector<std::int64_t> k{1};
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  bool wrap = false;
  std::string labeling = "uniform";
  std::uint64_t universe = 0;
  std::int64_t force_t = 0;
  bool timing = false;
  bool serial = false;
  std::string out_csv;
  std::string out_json;
};

hamq::ExperimentConfig to_config(const CommonArgs& a) {
  hamq::ExperimentConfig cfg;
  cfg.attack = hamq::parse_attack_id(a.attack);
  cfg.n_values = a.n;
  cfg.m_values = a.m;
  cfg.k_values = a.k;
  cfg.trials = a.trials;
  cfg.master_seed = a.seed;
  cfg.wrap_permutation = a.wrap;
  cfg.labeling = hamq::parse_labeling(a.labeling);
  if (a.universe > 0) cfg.universe_size = a.universe;
  if (a.force_t > 0) cfg.force_t = a.force_t;
  cfg.timing = a.timing;
  return cfg;
}

void add_common_options(CLI::App* cmd, CommonArgs& a, bool with_outputs) {
  cmd->add_option("--attack", a.attack,
                  "attack id: small | large | small-unknown | large-unknown | random-baseline");
  cmd->add_option("--n", a.n, "test set size(s), comma separated")->delimiter(',');
  cmd->add_option("--m", a.m, "class count(s), comma separated")->delimiter(',');
  cmd->add_option("--k", a.k, "query budget(s), comma separated")->delimiter(',');
  cmd->add_option("--trials", a.trials, "Monte Carlo trials per grid point");
  cmd->add_option("--seed", a.seed, "master seed (mandatory seeding; no wall clock)")
      ->required();
  cmd->add_flag("--wrap-permutation", a.wrap,
                "conjugate the attack by the per-coordinate permutation reduction");
  cmd->add_option("--labeling", a.labeling, "uniform | constant:L | file:PATH");
  cmd->add_option("--universe-size", a.universe,
                  "feature universe size for unknown-features attacks (default 4n)");
  cmd->add_option("--force-t", a.force_t, "override the prefix length of the large attacks");
  cmd->add_flag("--serial", a.serial, "run trials on one thread (reference path)");
  if (with_outputs) {
    cmd->add_flag("--timing", a.timing,
                  "measure per-trial wall time (makes CSV output non-reproducible)");
    cmd->add_option("--out-csv", a.out_csv, "write per-trial records as CSV");
    cmd->add_option("--out-json", a.out_json, "write the sweep summary as JSON");
  }
}

int cmd_run(const CommonArgs& a) {
  const hamq::SweepResult res = hamq::run_sweep(to_config(a), !a.serial);
  std::cout << hamq::format_table(res);
  if (!a.out_csv.empty()) hamq::write_csv(res, a.out_csv);
  if (!a.out_json.empty()) hamq::write_summary_json(res, a.out_json);
  return res.all_pass ? 0 : 1;
}

int cmd_verify_reduction(const CommonArgs& a) {
  const hamq::ReductionReport rep = hamq::verify_reduction(to_config(a), !a.serial);
  std::cout << hamq::reduction_json(rep).dump(2) << "\n";
  if (!a.out_json.empty()) {
    std::ofstream out(a.out_json, std::ios::binary);
    if (!out) throw hamq::IoError("cannot open for writing: " + a.out_json);
    out << hamq::reduction_json(rep).dump(2) << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_bounds(std::int64_t n, std::int64_t m, std::int64_t k) {
  const hamq::BoundReport rep =
      hamq::make_bound_report(n, static_cast<std::uint32_t>(m), k);
  std::cout << hamq::bound_report_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_oracle_exact(std::int64_t n, std::int64_t m, std::int64_t k,
                     const std::string& attack_name, std::vector<std::uint64_t> seeds) {
  const std::uint32_t mu = static_cast<std::uint32_t>(m);
  if (seeds.empty()) seeds.push_back(0);

  nlohmann::json j{{"schema", "hamming-overfit/1"}, {"n", n}, {"m", m}, {"k", k}};
  const mpq_class k1 = hamq::exact_small_k1_accuracy(n, mu);
  j["exact_small_k1"] = {{"value", k1.get_str()}, {"float", k1.get_d()}};
  const mpq_class mx = hamq::exact_max_pair_expectation(n, mu);
  j["exact_max_pair_expectation"] = {{"value", mx.get_str()}, {"float", mx.get_d()}};

  const hamq::AttackId id = hamq::parse_attack_id(attack_name);
  if (hamq::is_feature_model(id))
    throw hamq::ConfigError("oracle-exact supports sequence-model attacks only");
  const auto attack = hamq::make_sequence_attack(id, k, std::nullopt);
  const mpq_class avg = hamq::exhaustive_average_accuracy(
      static_cast<std::size_t>(n), mu, *attack, seeds);
  j["exhaustive"] = {{"attack", attack_name},
                     {"seeds", seeds},
                     {"value", avg.get_str()},
                     {"float", avg.get_d()}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo harness for sequence reconstruction from accuracy queries"};
  app.require_subcommand(1);

  CommonArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run a seeded Monte Carlo sweep");
  add_common_options(run, run_args, true);

  CommonArgs vr_args;
  vr_args.labeling = "constant:1";
  CLI::App* vr = app.add_subcommand(
      "verify-reduction",
      "compare the wrapped attack on a fixed labeling with the plain attack on uniform labels");
  add_common_options(vr, vr_args, false);
  vr->add_option("--out-json", vr_args.out_json, "write the report as JSON");

  std::int64_t bn = 1000, bm = 2, bk = 1;
  CLI::App* bounds = app.add_subcommand("bounds", "print the bound report for (n, m, k)");
  bounds->add_option("--n", bn, "test set size")->required();
  bounds->add_option("--m", bm, "class count")->required();
  bounds->add_option("--k", bk, "query budget")->required();

  std::int64_t on = 2, om = 2, ok = 1;
  std::string oattack = "small";
  std::vector<std::uint64_t> oseeds;
  CLI::App* oracle = app.add_subcommand(
      "oracle-exact", "exact tiny-instance values: closed forms and exhaustive enumeration");
  oracle->add_option("--n", on, "test set size")->required();
  oracle->add_option("--m", om, "class count")->required();
  oracle->add_option("--k", ok, "query budget for the enumerated attack");
  oracle->add_option("--attack", oattack, "sequence-model attack id");
  oracle->add_option("--seeds", oseeds, "seeds to average randomized attacks over")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (vr->parsed()) return cmd_verify_reduction(vr_args);
    if (bounds->parsed()) return cmd_bounds(bn, bm, bk);
    if (oracle->parsed()) return cmd_oracle_exact(on, om, ok, oattack, oseeds);
  } catch (const hamq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hamq::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
