#include "concord/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "concord/agreement.hpp"
#include "concord/coassociation.hpp"
#include "concord/errors.hpp"
#include "concord/gpmgla.hpp"
#include "concord/rng.hpp"
#include "concord/weac.hpp"

namespace concord {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Partition single_cluster(int n) {
  Partition p;
  p.labels.assign(n, 0);
  p.n_clusters = 1;
  return p;
}

// mean and standard error of the mean; stderr is 0 below two values.
void mean_stderr(const std::vector<double>& v, double& mean, double& se) {
  if (v.empty()) {
    mean = kNaN;
    se = 0.0;
    return;
  }
  double sum = 0.0;
  for (double x : v) sum += x;
  mean = sum / static_cast<double>(v.size());
  if (v.size() < 2) {
    se = 0.0;
    return;
  }
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  se = std::sqrt(ss / static_cast<double>(v.size() - 1)) /
       std::sqrt(static_cast<double>(v.size()));
}

struct ResolvedConfig {
  std::vector<MethodSpec> methods;
  int k_min = 2;
  int k_max = 2;
  int true_k = 0;
};

ResolvedConfig resolve(const Dataset& ds, const ExperimentConfig& cfg) {
  if (!ds.has_labels())
    throw InvalidSpec("the benchmark protocol needs a labeled dataset");
  if (ds.n_classes < 2)
    throw InvalidSpec("dataset has fewer than 2 classes");
  if (cfg.runs < 1) throw InvalidSpec("runs must be >= 1");
  if (cfg.ensemble_size < 2) throw InvalidSpec("ensemble size must be >= 2");
  if (cfg.alpha <= 0) throw InvalidSpec("alpha must be positive");
  if (cfg.beta < 0) throw InvalidSpec("beta must be non-negative");
  if (cfg.methods.empty()) throw InvalidSpec("methods list is empty");

  ResolvedConfig r;
  for (const auto& name : cfg.methods) {
    MethodSpec m = parse_method(name);
    for (const auto& seen : r.methods)
      if (seen.name == m.name)
        throw InvalidSpec("duplicate method: " + m.name);
    r.methods.push_back(std::move(m));
  }

  r.true_k = ds.n_classes;
  if (cfg.k_mode == "true-k") {
    r.k_min = r.k_max = r.true_k;
  } else if (cfg.k_mode == "best-k") {
    r.k_min = cfg.k_min > 0 ? cfg.k_min : 2;
    int def = std::min(2 * r.true_k,
                       static_cast<int>(std::sqrt(static_cast<double>(ds.n))) + 1);
    r.k_max = cfg.k_max > 0 ? cfg.k_max : std::max(r.k_min, def);
  } else {
    throw InvalidSpec("k mode must be best-k or true-k");
  }
  if (r.k_min < 2 || r.k_max < r.k_min || r.k_max > ds.n)
    throw InvalidSpec("k range must satisfy 2 <= k_min <= k_max <= n");
  return r;
}

// Consensus partitions of one method at every k, flagged per cell. k = 1 is
// the trivial single cluster for every method; any other failure leaves the
// cell unset instead of aborting the run.
void evaluate_method(const Ensemble& ens, const MethodSpec& m,
                     const ExperimentConfig& cfg, std::uint64_t run_seed,
                     const std::vector<int>& ks, std::vector<Partition>& parts,
                     std::vector<char>& ok) {
  const int n = ens.n();
  for (size_t i = 0; i < ks.size(); ++i)
    if (ks[i] == 1) {
      parts[i] = single_cluster(n);
      ok[i] = 1;
    }
  if (m.family == MethodSpec::Family::gpmgla) {
    try {
      GpmglaConfig gc;
      gc.alpha = cfg.alpha;
      gc.beta = cfg.beta;
      GpmglaSolver solver(ens, gc);
      for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] == 1) continue;
        try {
          parts[i] = solver.consensus(
              ks[i],
              rng::derive_seed(run_seed, static_cast<std::uint64_t>(ks[i]),
                               "tcut"));
          ok[i] = 1;
        } catch (const std::exception&) {
        }
      }
    } catch (const std::exception&) {
    }
    return;
  }
  const double beta = m.family == MethodSpec::Family::eac ? 0.0 : cfg.beta;
  try {
    auto co = weighted_coassociation(ens, beta, cfg.max_n);
    LinkageTree tree = linkage_cluster(std::move(co.values), m.linkage);
    for (size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] == 1) continue;
      try {
        parts[i] = cut(tree, ks[i]);
        ok[i] = 1;
      } catch (const std::exception&) {
      }
    }
  } catch (const std::exception&) {
  }
}

}  // namespace

MethodSpec parse_method(const std::string& name) {
  MethodSpec m;
  m.name = name;
  if (name == "gpmgla") {
    m.family = MethodSpec::Family::gpmgla;
    return m;
  }
  std::string kind;
  if (name.rfind("weac-", 0) == 0) {
    m.family = MethodSpec::Family::weac;
    kind = name.substr(5);
  } else if (name.rfind("eac-", 0) == 0) {
    m.family = MethodSpec::Family::eac;
    kind = name.substr(4);
  } else {
    throw InvalidSpec("unknown method: " + name);
  }
  if (kind == "al")
    m.linkage = Linkage::average;
  else if (kind == "cl")
    m.linkage = Linkage::complete;
  else if (kind == "sl")
    m.linkage = Linkage::single;
  else
    throw InvalidSpec("unknown method: " + name);
  return m;
}

std::vector<std::string> default_methods() {
  return {"weac-al", "weac-cl", "weac-sl", "eac-al",
          "eac-cl",  "eac-sl",  "gpmgla"};
}

RunReport run_experiment(const Dataset& ds, const ExperimentConfig& cfg) {
  ResolvedConfig rc = resolve(ds, cfg);

  RunReport rep;
  rep.dataset = ds.name;
  rep.n = ds.n;
  rep.d = ds.d;
  rep.true_k = rc.true_k;
  rep.config = cfg;
  rep.config.k_min = rc.k_min;
  rep.config.k_max = rc.k_max;

  const Partition truth = ds.truth();
  const Pool pool = build_pool(ds, cfg.pool, rng::derive_seed(cfg.seed, 0, "pool"));

  for (int r = 0; r < cfg.runs; ++r) {
    const std::uint64_t run_seed = rng::derive_seed(cfg.seed, r, "run");
    std::vector<int> picked;
    Ensemble ens = sample_ensemble(pool, cfg.ensemble_size,
                                   rng::derive_seed(run_seed, 0, "sample"),
                                   &picked);

    std::vector<int> ks;
    for (int k = rc.k_min; k <= rc.k_max; ++k) ks.push_back(k);
    ks.push_back(rc.true_k);
    for (const auto& mem : ens.members) ks.push_back(mem.n_clusters);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    for (int j = 0; j < ens.size(); ++j)
      rep.rows.push_back({r, "base", "pool" + std::to_string(picked[j]),
                          ens.members[j].n_clusters,
                          nmi(ens.members[j], truth)});

    for (const auto& m : rc.methods) {
      std::vector<Partition> parts(ks.size());
      std::vector<char> ok(ks.size(), 0);
      const auto t0 = std::chrono::steady_clock::now();
      evaluate_method(ens, m, cfg, run_seed, ks, parts, ok);
      rep.times.push_back({r, m.name, seconds_since(t0)});
      for (size_t i = 0; i < ks.size(); ++i)
        rep.rows.push_back({r, "method", m.name, ks[i],
                            ok[i] ? nmi(parts[i], truth) : kNaN});
    }
  }

  std::vector<std::string> names;
  for (const auto& m : rc.methods) names.push_back(m.name);
  rep.aggregates =
      compute_aggregates(rep.rows, names, rc.k_min, rc.k_max, rc.true_k);
  return rep;
}

std::vector<AggRow> compute_aggregates(const std::vector<ReportRow>& rows,
                                       const std::vector<std::string>& methods,
                                       int k_min, int k_max, int true_k) {
  struct Acc {
    double sum = 0.0;
    int count = 0;
  };
  struct RunData {
    std::vector<std::pair<int, double>> bases;  // (k, nmi) in row order
    std::map<std::pair<int, int>, double> cells;  // (method idx, k) -> nmi
  };

  std::map<std::string, int> index;
  for (size_t i = 0; i < methods.size(); ++i)
    index[methods[i]] = static_cast<int>(i);

  std::vector<std::map<int, Acc>> per_k(methods.size());
  std::vector<int> failed(methods.size(), 0);
  std::map<int, RunData> runs;

  for (const auto& row : rows) {
    if (row.kind == "base") {
      runs[row.run].bases.emplace_back(row.k, row.nmi);
      continue;
    }
    auto it = index.find(row.name);
    if (it == index.end()) continue;  // method outside the requested set
    const int mi = it->second;
    runs[row.run].cells[{mi, row.k}] = row.nmi;
    if (std::isnan(row.nmi)) {
      ++failed[mi];
    } else {
      auto& acc = per_k[mi][row.k];
      acc.sum += row.nmi;
      ++acc.count;
    }
  }

  std::vector<AggRow> out;
  std::vector<std::map<int, double>> means(methods.size());
  std::vector<int> best_k(methods.size(), -1);

  for (size_t mi = 0; mi < methods.size(); ++mi) {
    for (const auto& [k, acc] : per_k[mi])
      means[mi][k] = acc.count ? acc.sum / acc.count : kNaN;
    for (const auto& [k, mean] : means[mi])
      out.push_back({"mean_nmi", methods[mi], k, mean});

    for (int k = k_min; k <= k_max; ++k) {
      auto it = means[mi].find(k);
      if (it == means[mi].end() || std::isnan(it->second)) continue;
      if (best_k[mi] < 0 || it->second > means[mi][best_k[mi]])
        best_k[mi] = k;
    }
    const bool has_best = best_k[mi] >= 0;
    out.push_back({"best_k", methods[mi], -1,
                   has_best ? static_cast<double>(best_k[mi]) : kNaN});
    out.push_back({"mean_nmi_best_k", methods[mi], -1,
                   has_best ? means[mi][best_k[mi]] : kNaN});
    auto tk = means[mi].find(true_k);
    out.push_back({"mean_nmi_true_k", methods[mi], -1,
                   tk != means[mi].end() ? tk->second : kNaN});

    // Paired comparisons against every drawn member: same-k at the member's
    // own cluster count, best-k at this method's best k. Exact ties are half
    // a win; failed or missing cells leave the denominator.
    double wins_same = 0.0, wins_best = 0.0;
    int n_same = 0, n_best = 0;
    for (const auto& [run, data] : runs) {
      for (const auto& [bk, bnmi] : data.bases) {
        auto cell = data.cells.find({static_cast<int>(mi), bk});
        if (cell != data.cells.end() && !std::isnan(cell->second)) {
          ++n_same;
          if (cell->second > bnmi)
            wins_same += 1.0;
          else if (cell->second == bnmi)
            wins_same += 0.5;
        }
        if (has_best) {
          auto bc = data.cells.find({static_cast<int>(mi), best_k[mi]});
          if (bc != data.cells.end() && !std::isnan(bc->second)) {
            ++n_best;
            if (bc->second > bnmi)
              wins_best += 1.0;
            else if (bc->second == bnmi)
              wins_best += 0.5;
          }
        }
      }
    }
    out.push_back({"win_same_k", methods[mi], -1,
                   n_same ? 100.0 * wins_same / n_same : kNaN});
    out.push_back({"win_same_k_n", methods[mi], -1, static_cast<double>(n_same)});
    out.push_back({"win_best_k", methods[mi], -1,
                   n_best ? 100.0 * wins_best / n_best : kNaN});
    out.push_back({"win_best_k_n", methods[mi], -1, static_cast<double>(n_best)});
    out.push_back({"failed", methods[mi], -1, static_cast<double>(failed[mi])});
  }

  double sum_max = 0.0, sum_min = 0.0, sum_avg = 0.0;
  int n_runs = 0;
  for (const auto& [run, data] : runs) {
    if (data.bases.empty()) continue;
    double mx = data.bases.front().second;
    double mn = mx;
    double sm = 0.0;
    for (const auto& [bk, bnmi] : data.bases) {
      if (bnmi > mx) mx = bnmi;
      if (bnmi < mn) mn = bnmi;
      sm += bnmi;
    }
    sum_max += mx;
    sum_min += mn;
    sum_avg += sm / static_cast<double>(data.bases.size());
    ++n_runs;
  }
  out.push_back({"base_max", "base", -1, n_runs ? sum_max / n_runs : kNaN});
  out.push_back({"base_min", "base", -1, n_runs ? sum_min / n_runs : kNaN});
  out.push_back({"base_avg", "base", -1, n_runs ? sum_avg / n_runs : kNaN});
  return out;
}

SweepIllReport sweep_ill(const Dataset& ds, const ExperimentConfig& cfg,
                         const std::vector<double>& ratios) {
  if (ratios.empty()) throw InvalidSpec("ratios list is empty");
  for (double r : ratios)
    if (!(r >= 0.0 && r <= 1.0))
      throw InvalidSpec("ill ratios must lie in [0, 1]");
  SweepIllReport out;
  out.ratios = ratios;
  for (double r : ratios) {
    ExperimentConfig c = cfg;
    c.pool.ill_ratio = r;
    out.reports.push_back(run_experiment(ds, c));
  }
  return out;
}

std::vector<SeriesRow> compute_series(const SweepIllReport& sweep) {
  std::vector<SeriesRow> out;
  for (size_t i = 0; i < sweep.reports.size(); ++i) {
    const RunReport& rep = sweep.reports[i];
    for (const auto& m : rep.config.methods) {
      std::vector<double> vals;
      for (const auto& row : rep.rows)
        if (row.kind == "method" && row.name == m && row.k == rep.true_k &&
            !std::isnan(row.nmi))
          vals.push_back(row.nmi);
      SeriesRow s;
      s.x = sweep.ratios[i];
      s.method = m;
      s.count = static_cast<int>(vals.size());
      mean_stderr(vals, s.mean, s.stderr_);
      out.push_back(std::move(s));
    }
  }
  return out;
}

double TimeCell::median() const {
  if (skipped) return kNaN;
  double a[3] = {reps[0], reps[1], reps[2]};
  std::sort(a, a + 3);
  return a[1];
}

double TimeCell::mean() const {
  if (skipped) return kNaN;
  return (reps[0] + reps[1] + reps[2]) / 3.0;
}

double TimeCell::stderr_() const {
  if (skipped) return kNaN;
  const double m = mean();
  double ss = 0.0;
  for (double r : reps) ss += (r - m) * (r - m);
  return std::sqrt(ss / 2.0) / std::sqrt(3.0);
}

SweepTimeReport sweep_time(const Dataset& ds, const ExperimentConfig& cfg,
                           const std::vector<int>& sizes) {
  if (!ds.has_labels() || ds.n_classes < 2)
    throw InvalidSpec("timing sweeps need a labeled dataset");
  if (sizes.empty()) throw InvalidSpec("sizes list is empty");
  for (int s : sizes)
    if (s < 4 || s > ds.n)
      throw InvalidSize("sweep size must lie in [4, n]");
  std::vector<MethodSpec> methods;
  for (const auto& name : cfg.methods) methods.push_back(parse_method(name));

  SweepTimeReport out;
  out.dataset = ds.name;
  out.n = ds.n;
  out.d = ds.d;
  out.true_k = ds.n_classes;
  out.config = cfg;
  out.sizes = sizes;

  for (size_t i = 0; i < sizes.size(); ++i) {
    const Dataset sub = prefix(ds, sizes[i]);
    const std::uint64_t size_seed = rng::derive_seed(cfg.seed, i, "size");
    const Pool pool =
        build_pool(sub, cfg.pool, rng::derive_seed(size_seed, 0, "pool"));
    const Ensemble ens = sample_ensemble(
        pool, cfg.ensemble_size, rng::derive_seed(size_seed, 0, "sample"));
    const int k = out.true_k;

    for (const auto& m : methods) {
      TimeCell cell;
      cell.x = sizes[i];
      cell.method = m.name;
      auto once = [&]() {
        const auto t0 = std::chrono::steady_clock::now();
        if (m.family == MethodSpec::Family::gpmgla) {
          GpmglaConfig gc;
          gc.alpha = cfg.alpha;
          gc.beta = cfg.beta;
          GpmglaSolver solver(ens, gc);
          solver.consensus(k, rng::derive_seed(size_seed, k, "tcut"));
        } else {
          const double beta =
              m.family == MethodSpec::Family::eac ? 0.0 : cfg.beta;
          auto co = weighted_coassociation(ens, beta, cfg.max_n);
          LinkageTree tree = linkage_cluster(std::move(co.values), m.linkage);
          cut(tree, k);
        }
        return seconds_since(t0);
      };
      try {
        once();  // warm-up, discarded
        for (double& rep : cell.reps) rep = once();
      } catch (const std::exception&) {
        cell.skipped = true;
        for (double& rep : cell.reps) rep = kNaN;
      }
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace concord
