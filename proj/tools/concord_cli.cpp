// Benchmark CLI: dataset ingestion, pool generation, the seeded experiment
// protocol, ill-ratio and timing sweeps, NMI evaluation, and report
// recomputation. Every command that generates randomness requires --seed and
// is fully reproducible from its flags.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "concord/agreement.hpp"
#include "concord/dataset_io.hpp"
#include "concord/errors.hpp"
#include "concord/experiment.hpp"
#include "concord/pool.hpp"
#include "concord/report.hpp"
#include "concord/rng.hpp"
#include "concord/text.hpp"

namespace {

struct DataFlags {
  std::string header = "auto";
  std::string label_col = "last";
  bool no_normalize = false;
  std::string name;
};

void add_data_flags(CLI::App* cmd, DataFlags& f) {
  cmd->add_option("--header", f.header, "Header row: auto|yes|no")
      ->default_str("auto");
  cmd->add_option("--label-col", f.label_col,
                  "Label column: last|none|<index>|<name>")
      ->default_str("last");
  cmd->add_flag("--no-normalize", f.no_normalize,
                "Skip per-attribute z-scoring");
  cmd->add_option("--name", f.name, "Dataset name override");
}

concord::LoadOptions to_load_options(const DataFlags& f) {
  concord::LoadOptions opt;
  opt.header = f.header;
  opt.label_column = f.label_col;
  opt.normalize = !f.no_normalize;
  opt.name = f.name;
  return opt;
}

concord::SourceInfo to_source(const std::string& path, const DataFlags& f) {
  concord::SourceInfo s;
  s.path = path;
  s.header = f.header;
  s.label_column = f.label_col;
  s.normalize = !f.no_normalize;
  return s;
}

void add_pool_flags(CLI::App* cmd, concord::PoolSpec& p) {
  cmd->add_option("--pool-kmeans", p.kmeans_count, "k-means pool entries")
      ->default_str("100");
  cmd->add_option("--pool-rpcl", p.rpcl_count, "RPCL pool entries")
      ->default_str("100");
  cmd->add_option("--ill-ratio", p.ill_ratio,
                  "Fraction of the pool replaced by ill clusterings")
      ->default_str("0");
  cmd->add_option("--rpcl-learn", p.rpcl_learn_rate, "RPCL winner rate")
      ->default_str("0.05");
  cmd->add_option("--rpcl-delearn", p.rpcl_delearn_rate, "RPCL rival rate")
      ->default_str("0.002");
}

void add_experiment_flags(CLI::App* cmd, concord::ExperimentConfig& cfg) {
  add_pool_flags(cmd, cfg.pool);
  cmd->add_option("--runs", cfg.runs, "Protocol repetitions R")
      ->default_str("100");
  cmd->add_option("--ensemble-size", cfg.ensemble_size,
                  "Members drawn per run (M)")
      ->default_str("5");
  cmd->add_option("--methods", cfg.methods,
                  "Comma list of weac-al|weac-cl|weac-sl|eac-al|eac-cl|eac-sl|"
                  "gpmgla")
      ->delimiter(',');
  cmd->add_option("--alpha", cfg.alpha, "Instance-link weight scale")
      ->default_str("0.5");
  cmd->add_option("--beta", cfg.beta, "Agreement influence exponent")
      ->default_str("2");
  cmd->add_option("--k-mode", cfg.k_mode, "best-k|true-k")
      ->default_str("best-k");
  cmd->add_option("--k-min", cfg.k_min, "Search range lower bound (0 = auto)");
  cmd->add_option("--k-max", cfg.k_max, "Search range upper bound (0 = auto)");
  cmd->add_option("--max-n", cfg.max_n,
                  "Refuse dense n-by-n stages beyond this instance count")
      ->default_str("20000");
}

// Label file: one row per instance; the last comma/tab/space-separated token
// is the label. A leading non-numeric line is treated as a header.
std::vector<std::string> read_label_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw concord::IoError("cannot open label file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t end = line.find_last_not_of(" \t");
    if (end == std::string::npos) continue;
    line.resize(end + 1);
    size_t cutoff = line.find_last_of(",\t ");
    out.push_back(cutoff == std::string::npos ? line : line.substr(cutoff + 1));
  }
  if (out.empty()) throw concord::IngestError("empty label file: " + path);
  double v;
  if (!concord::parse_double(out.front(), v) && out.size() > 1)
    out.erase(out.begin());
  return out;
}

concord::Partition labels_to_partition(const std::vector<std::string>& toks) {
  // Numeric labels order by value, anything else lexicographically — the
  // same canonicalization the dataset loader applies.
  bool numeric = true;
  std::vector<double> vals(toks.size());
  for (size_t i = 0; i < toks.size(); ++i)
    if (!concord::parse_double(toks[i], vals[i])) {
      numeric = false;
      break;
    }
  std::vector<int> raw(toks.size());
  if (numeric) {
    std::vector<double> sorted(vals);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t i = 0; i < vals.size(); ++i)
      raw[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), vals[i]) -
          sorted.begin());
  } else {
    std::vector<std::string> sorted(toks);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t i = 0; i < toks.size(); ++i)
      raw[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), toks[i]) -
          sorted.begin());
  }
  return concord::partition_from_labels(raw);
}

void print_run_summary(const concord::RunReport& rep) {
  std::cout << "dataset " << rep.dataset << " n=" << rep.n << " d=" << rep.d
            << " true_k=" << rep.true_k << " k_range=[" << rep.config.k_min
            << "," << rep.config.k_max << "]\n";
  for (const auto& a : rep.aggregates)
    if (a.k < 0)
      std::cout << a.metric << " " << a.method << " "
                << concord::format_double(a.value) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consensus clustering benchmark harness"};
  app.require_subcommand(1);

  // --- synth ---------------------------------------------------------------
  auto* synth = app.add_subcommand(
      "synth", "Write a synthetic Gaussian-mixture dataset CSV");
  std::string synth_out;
  int synth_n = 8000, synth_d = 2, synth_k = 5;
  double synth_spread = 1.0;
  std::uint64_t synth_seed = 0;
  std::string synth_name = "synthetic";
  synth->add_option("--out", synth_out, "Output CSV path")->required();
  synth->add_option("--n", synth_n, "Instances")->default_str("8000");
  synth->add_option("--d", synth_d, "Attributes")->default_str("2");
  synth->add_option("--k", synth_k, "Mixture components")->default_str("5");
  synth->add_option("--spread", synth_spread, "Component standard deviation")
      ->default_str("1");
  synth->add_option("--seed", synth_seed, "Master seed")->required();
  synth->add_option("--name", synth_name, "Dataset name");

  // --- pool build ----------------------------------------------------------
  auto* pool_cmd = app.add_subcommand("pool", "Pool inspection");
  pool_cmd->require_subcommand(1);
  auto* pool_build =
      pool_cmd->add_subcommand("build", "Generate a pool and write its CSV");
  std::string pb_dataset, pb_out;
  std::uint64_t pb_seed = 0;
  concord::PoolSpec pb_spec;
  DataFlags pb_data;
  pool_build->add_option("--dataset", pb_dataset, "Input CSV")->required();
  pool_build->add_option("--out", pb_out, "Output pool CSV path")->required();
  pool_build->add_option("--seed", pb_seed, "Master seed")->required();
  add_pool_flags(pool_build, pb_spec);
  add_data_flags(pool_build, pb_data);

  // --- run -----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "Run the benchmark protocol");
  std::string run_dataset, run_out;
  concord::ExperimentConfig run_cfg;
  DataFlags run_data;
  run_cmd->add_option("--dataset", run_dataset, "Input CSV")->required();
  run_cmd->add_option("--out", run_out, "Report base path")->required();
  run_cmd->add_option("--seed", run_cfg.seed, "Master seed")->required();
  add_experiment_flags(run_cmd, run_cfg);
  add_data_flags(run_cmd, run_data);

  // --- sweep-ill -----------------------------------------------------------
  auto* ill_cmd =
      app.add_subcommand("sweep-ill", "Protocol across ill-clustering ratios");
  std::string ill_dataset, ill_out;
  concord::ExperimentConfig ill_cfg;
  std::vector<double> ill_ratios;
  DataFlags ill_data;
  ill_cmd->add_option("--dataset", ill_dataset, "Input CSV")->required();
  ill_cmd->add_option("--out", ill_out, "Report base path")->required();
  ill_cmd->add_option("--seed", ill_cfg.seed, "Master seed")->required();
  ill_cmd->add_option("--ratios", ill_ratios, "Comma list of ill ratios")
      ->delimiter(',')
      ->required();
  add_experiment_flags(ill_cmd, ill_cfg);
  add_data_flags(ill_cmd, ill_data);

  // --- sweep-time ----------------------------------------------------------
  auto* time_cmd =
      app.add_subcommand("sweep-time", "Wall-clock scaling across sizes");
  std::string time_dataset, time_out;
  concord::ExperimentConfig time_cfg;
  std::vector<int> time_sizes;
  DataFlags time_data;
  time_cmd->add_option("--dataset", time_dataset, "Input CSV")->required();
  time_cmd->add_option("--out", time_out, "Report base path")->required();
  time_cmd->add_option("--seed", time_cfg.seed, "Master seed")->required();
  time_cmd->add_option("--sizes", time_sizes, "Comma list of prefix sizes")
      ->delimiter(',')
      ->required();
  add_experiment_flags(time_cmd, time_cfg);
  add_data_flags(time_cmd, time_data);

  // --- eval ----------------------------------------------------------------
  auto* eval_cmd =
      app.add_subcommand("eval", "NMI between two label files (stdout)");
  std::string eval_truth, eval_pred;
  eval_cmd->add_option("--truth", eval_truth, "Reference labels")->required();
  eval_cmd->add_option("--pred", eval_pred, "Candidate labels")->required();

  // --- report recompute ------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "Report post-processing");
  report_cmd->require_subcommand(1);
  auto* recompute = report_cmd->add_subcommand(
      "recompute", "Re-derive the aggregates file from a run JSON's rows");
  std::string rc_json, rc_out;
  recompute->add_option("--json", rc_json, "Run report JSON")->required();
  recompute->add_option("--out", rc_out, "Output base path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      concord::Dataset ds = concord::gaussian_mixture(
          synth_n, synth_d, synth_k, synth_spread, synth_seed, synth_name);
      concord::save_dataset(ds, synth_out);
      std::cout << "wrote " << synth_out << " n=" << ds.n << " d=" << ds.d
                << " k=" << ds.n_classes << "\n";
    } else if (*pool_build) {
      concord::Dataset ds =
          concord::load_dataset(pb_dataset, to_load_options(pb_data));
      concord::Pool pool = concord::build_pool(
          ds, pb_spec, concord::rng::derive_seed(pb_seed, 0, "pool"));
      concord::write_pool_csv(pool, pb_out);
      std::cout << "wrote " << pb_out << " entries=" << pool.size() << "\n";
    } else if (*run_cmd) {
      concord::Dataset ds =
          concord::load_dataset(run_dataset, to_load_options(run_data));
      concord::RunReport rep = concord::run_experiment(ds, run_cfg);
      rep.source = to_source(run_dataset, run_data);
      concord::write_run_report(rep, run_out);
      print_run_summary(rep);
    } else if (*ill_cmd) {
      concord::Dataset ds =
          concord::load_dataset(ill_dataset, to_load_options(ill_data));
      concord::SweepIllReport sweep =
          concord::sweep_ill(ds, ill_cfg, ill_ratios);
      for (auto& rep : sweep.reports) rep.source = to_source(ill_dataset, ill_data);
      concord::write_sweep_ill(sweep, ill_out);
      for (const auto& s : concord::compute_series(sweep))
        std::cout << "x=" << concord::format_double(s.x) << " " << s.method
                  << " mean=" << concord::format_double(s.mean)
                  << " stderr=" << concord::format_double(s.stderr_) << "\n";
    } else if (*time_cmd) {
      concord::Dataset ds =
          concord::load_dataset(time_dataset, to_load_options(time_data));
      concord::SweepTimeReport sweep =
          concord::sweep_time(ds, time_cfg, time_sizes);
      sweep.source = to_source(time_dataset, time_data);
      concord::write_sweep_time(sweep, time_out);
      for (const auto& c : sweep.cells)
        std::cout << "n=" << c.x << " " << c.method
                  << " median=" << concord::format_double(c.median())
                  << (c.skipped ? " skipped" : "") << "\n";
    } else if (*eval_cmd) {
      auto t = labels_to_partition(read_label_tokens(eval_truth));
      auto p = labels_to_partition(read_label_tokens(eval_pred));
      std::cout << concord::format_double(concord::nmi(t, p)) << "\n";
    } else if (*recompute) {
      concord::recompute_aggregates_file(rc_json, rc_out);
      std::cout << "wrote " << rc_out << ".agg.csv\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
