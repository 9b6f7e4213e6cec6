#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concord/dataset.hpp"
#include "concord/linkage.hpp"
#include "concord/pool.hpp"

namespace concord {

// One consensus method under benchmark. Names are the CLI vocabulary:
// weac-al/cl/sl (agreement-weighted evidence accumulation, one linkage each),
// eac-al/cl/sl (the unweighted β = 0 baselines), gpmgla (bipartite spectral).
struct MethodSpec {
  enum class Family { weac, eac, gpmgla };
  std::string name;
  Family family = Family::weac;
  Linkage linkage = Linkage::average;
};

MethodSpec parse_method(const std::string& name);  // throws InvalidSpec
std::vector<std::string> default_methods();        // all seven

struct ExperimentConfig {
  PoolSpec pool;
  int ensemble_size = 5;  // members drawn per run
  int runs = 100;
  std::vector<std::string> methods = default_methods();
  double alpha = 0.5;
  double beta = 2.0;
  // "best-k": evaluate every k in [k_min, k_max] (0 = default range
  // [2, min(2·true_k, ⌊√n⌋+1)]). "true-k": range collapses to {true_k}.
  std::string k_mode = "best-k";
  int k_min = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  int max_n = 20000;  // dense n×n memory guard
};

// One scored cell. kind "base": name = "pool<index>" of the drawn member, k =
// its cluster count, nmi = member vs. ground truth. kind "method": name = the
// method, k = evaluated cluster count, nmi = consensus vs. ground truth (NaN
// for a failed cell). Row order: per run, the M base rows in draw order, then
// per method (config order) one row per k ascending.
struct ReportRow {
  int run = 0;
  std::string kind;
  std::string name;
  int k = 0;
  double nmi = 0.0;
};

// One aggregate value; k = -1 when the metric is not per-k.
struct AggRow {
  std::string metric;
  std::string method;
  int k = -1;
  double value = 0.0;
};

// Wall-clock of one method in one run (everything from agreement profile to
// the partitions at every evaluated k; scoring excluded).
struct TimeRow {
  int run = 0;
  std::string method;
  double seconds = 0.0;
};

// How the dataset was obtained — echoed into reports so an emitted config is
// sufficient to replay the experiment. Filled by the CLI; empty path for
// in-memory datasets.
struct SourceInfo {
  std::string path;
  std::string header = "auto";
  std::string label_column = "last";
  bool normalize = true;
};

struct RunReport {
  std::string dataset;
  int n = 0;
  int d = 0;
  int true_k = 0;
  SourceInfo source;
  ExperimentConfig config;  // k_min/k_max resolved to the range actually run
  std::vector<ReportRow> rows;
  std::vector<AggRow> aggregates;
  std::vector<TimeRow> times;
};

// The benchmark protocol. The pool is built once; run r draws its ensemble
// with a run-private sub-seed, every method scores at every k in the range
// plus the true k plus each member's own k (so same-k comparisons always have
// their cell). Per-method failures are recorded as NaN cells, never aborting
// the sweep. Requires a labeled dataset.
RunReport run_experiment(const Dataset& ds, const ExperimentConfig& cfg);

// Aggregates as a pure function of the rows (plus the config facts a rows
// file does not carry). Per method: mean_nmi per k; best_k (argmax of mean
// over [k_min, k_max], ties to the smallest k); mean_nmi_best_k;
// mean_nmi_true_k; win_same_k / win_best_k percentages with their comparison
// counts (wins count 1, exact ties ½; failed cells leave the denominator);
// failed cell count. Then base_max / base_min / base_avg: the mean over runs
// of the best / worst / average member NMI.
std::vector<AggRow> compute_aggregates(const std::vector<ReportRow>& rows,
                                       const std::vector<std::string>& methods,
                                       int k_min, int k_max, int true_k);

struct SweepIllReport {
  std::vector<double> ratios;
  std::vector<RunReport> reports;  // one per ratio, same master seed
};

// Re-runs the protocol per ill ratio. The pool seed is ratio-independent, so
// the replaced (ill) subsets nest across ratios and every run draws the same
// member indices — ratio 0 of a sweep is bit-identical to a plain run.
SweepIllReport sweep_ill(const Dataset& ds, const ExperimentConfig& cfg,
                         const std::vector<double>& ratios);

// Mean/stderr of a method's NMI at the true k, per ratio; the plot series.
struct SeriesRow {
  double x = 0.0;
  std::string method;
  double mean = 0.0;
  double stderr_ = 0.0;
  int count = 0;  // runs contributing (failed cells drop out)
};

std::vector<SeriesRow> compute_series(const SweepIllReport& sweep);

// Wall-clock scaling: one cell per (size, method). Reps are end-to-end
// (profile through consensus partition at the true k); a warm-up execution
// precedes the reps and is discarded. skipped = the method refused the size
// (memory guard) or failed; its reps are NaN.
struct TimeCell {
  int x = 0;  // instance count
  std::string method;
  double reps[3] = {0, 0, 0};
  bool skipped = false;

  double median() const;
  double mean() const;
  double stderr_() const;
};

struct SweepTimeReport {
  std::string dataset;
  int n = 0;  // of the full dataset; cells sample prefixes
  int d = 0;
  int true_k = 0;
  SourceInfo source;
  ExperimentConfig config;
  std::vector<int> sizes;
  std::vector<TimeCell> cells;
};

// Prefix-subsamples the dataset at each size, builds a size-private pool,
// draws one ensemble, and times each method on it.
SweepTimeReport sweep_time(const Dataset& ds, const ExperimentConfig& cfg,
                           const std::vector<int>& sizes);

}  // namespace concord
