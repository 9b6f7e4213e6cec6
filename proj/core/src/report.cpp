#include "concord/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "concord/errors.hpp"
#include "concord/text.hpp"
#include "json.hpp"

namespace concord {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string basename_of(const std::string& base) {
  size_t slash = base.find_last_of("/\\");
  return slash == std::string::npos ? base : base.substr(slash + 1);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report file: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed writing report file: " + path);
}

void write_rows_csv(const std::vector<ReportRow>& rows,
                    const std::string& path) {
  auto out = open_out(path);
  out << "run,kind,name,k,nmi\n";
  for (const auto& r : rows)
    out << r.run << ',' << r.kind << ',' << r.name << ',' << r.k << ','
        << format_double(r.nmi) << '\n';
  finish(out, path);
}

void write_agg_csv(const std::vector<AggRow>& aggs, const std::string& path) {
  auto out = open_out(path);
  out << "metric,method,k,value\n";
  for (const auto& a : aggs) {
    out << a.metric << ',' << a.method << ',';
    if (a.k >= 0) out << a.k;
    out << ',' << format_double(a.value) << '\n';
  }
  finish(out, path);
}

json config_json(const ExperimentConfig& cfg, const SourceInfo& src,
                 const std::string& name, int n, int d, int true_k) {
  json j;
  j["dataset"] = {{"name", name}, {"n", n}, {"d", d}, {"true_k", true_k}};
  j["source"] = {{"path", src.path},
                 {"header", src.header},
                 {"label_column", src.label_column},
                 {"normalize", src.normalize}};
  j["pool"] = {{"kmeans_count", cfg.pool.kmeans_count},
               {"rpcl_count", cfg.pool.rpcl_count},
               {"ill_ratio", cfg.pool.ill_ratio},
               {"rpcl_learn_rate", cfg.pool.rpcl_learn_rate},
               {"rpcl_delearn_rate", cfg.pool.rpcl_delearn_rate}};
  j["ensemble_size"] = cfg.ensemble_size;
  j["runs"] = cfg.runs;
  j["methods"] = cfg.methods;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["k_mode"] = cfg.k_mode;
  j["k_min"] = cfg.k_min;
  j["k_max"] = cfg.k_max;
  j["seed"] = cfg.seed;
  j["max_n"] = cfg.max_n;
  return j;
}

json rows_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json o;
    o["run"] = r.run;
    o["kind"] = r.kind;
    o["name"] = r.name;
    o["k"] = r.k;
    if (std::isnan(r.nmi))
      o["nmi"] = nullptr;
    else
      o["nmi"] = r.nmi;
    arr.push_back(std::move(o));
  }
  return arr;
}

json aggs_json(const std::vector<AggRow>& aggs) {
  json arr = json::array();
  for (const auto& a : aggs) {
    json o;
    o["metric"] = a.metric;
    o["method"] = a.method;
    if (a.k >= 0)
      o["k"] = a.k;
    else
      o["k"] = nullptr;
    if (std::isnan(a.value))
      o["value"] = nullptr;
    else
      o["value"] = a.value;
    arr.push_back(std::move(o));
  }
  return arr;
}

void write_json(const json& j, const std::string& path) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

}  // namespace

void write_run_report(const RunReport& rep, const std::string& base) {
  write_rows_csv(rep.rows, base + ".rows.csv");
  write_agg_csv(rep.aggregates, base + ".agg.csv");

  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "run";
  j["config"] = config_json(rep.config, rep.source, rep.dataset, rep.n, rep.d,
                            rep.true_k);
  j["aggregates"] = aggs_json(rep.aggregates);
  j["rows"] = rows_json(rep.rows);
  j["times_file"] = basename_of(base) + ".times.csv";
  write_json(j, base + ".json");

  const std::string tpath = base + ".times.csv";
  auto out = open_out(tpath);
  out << "run,method,seconds\n";
  for (const auto& t : rep.times)
    out << t.run << ',' << t.method << ',' << format_double(t.seconds) << '\n';
  finish(out, tpath);
}

void write_sweep_ill(const SweepIllReport& sweep, const std::string& base) {
  for (size_t i = 0; i < sweep.reports.size(); ++i) {
    const std::string sub = base + ".ill" + std::to_string(i);
    write_rows_csv(sweep.reports[i].rows, sub + ".rows.csv");
    write_agg_csv(sweep.reports[i].aggregates, sub + ".agg.csv");
  }

  const auto series = compute_series(sweep);
  {
    const std::string spath = base + ".series.csv";
    auto out = open_out(spath);
    out << "x,method,mean,stderr,count\n";
    for (const auto& s : series)
      out << format_double(s.x) << ',' << s.method << ','
          << format_double(s.mean) << ',' << format_double(s.stderr_) << ','
          << s.count << '\n';
    finish(out, spath);
  }

  const RunReport& first = sweep.reports.front();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sweep-ill";
  j["config"] = config_json(first.config, first.source, first.dataset, first.n,
                            first.d, first.true_k);
  j["ratios"] = sweep.ratios;
  json series_arr = json::array();
  for (const auto& s : series) {
    json o;
    o["x"] = s.x;
    o["method"] = s.method;
    if (std::isnan(s.mean))
      o["mean"] = nullptr;
    else
      o["mean"] = s.mean;
    o["stderr"] = s.stderr_;
    o["count"] = s.count;
    series_arr.push_back(std::move(o));
  }
  j["series"] = std::move(series_arr);
  json reports = json::array();
  for (size_t i = 0; i < sweep.reports.size(); ++i) {
    json o;
    o["ratio"] = sweep.ratios[i];
    o["aggregates"] = aggs_json(sweep.reports[i].aggregates);
    o["rows"] = rows_json(sweep.reports[i].rows);
    reports.push_back(std::move(o));
  }
  j["reports"] = std::move(reports);
  j["times_file"] = basename_of(base) + ".times.csv";
  write_json(j, base + ".json");

  const std::string tpath = base + ".times.csv";
  auto out = open_out(tpath);
  out << "x,run,method,seconds\n";
  for (size_t i = 0; i < sweep.reports.size(); ++i)
    for (const auto& t : sweep.reports[i].times)
      out << format_double(sweep.ratios[i]) << ',' << t.run << ',' << t.method
          << ',' << format_double(t.seconds) << '\n';
  finish(out, tpath);
}

void write_sweep_time(const SweepTimeReport& sweep, const std::string& base) {
  {
    const std::string tpath = base + ".times.csv";
    auto out = open_out(tpath);
    out << "x,method,median,mean,stderr,rep1,rep2,rep3,skipped\n";
    for (const auto& c : sweep.cells)
      out << c.x << ',' << c.method << ',' << format_double(c.median()) << ','
          << format_double(c.mean()) << ',' << format_double(c.stderr_()) << ','
          << format_double(c.reps[0]) << ',' << format_double(c.reps[1]) << ','
          << format_double(c.reps[2]) << ',' << (c.skipped ? 1 : 0) << '\n';
    finish(out, tpath);
  }

  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sweep-time";
  j["config"] = config_json(sweep.config, sweep.source, sweep.dataset, sweep.n,
                            sweep.d, sweep.true_k);
  j["sizes"] = sweep.sizes;
  json cells = json::array();
  for (const auto& c : sweep.cells) {
    json o;
    o["x"] = c.x;
    o["method"] = c.method;
    o["skipped"] = c.skipped;
    cells.push_back(std::move(o));
  }
  j["cells"] = std::move(cells);
  j["times_file"] = basename_of(base) + ".times.csv";
  write_json(j, base + ".json");
}

void write_pool_csv(const Pool& pool, const std::string& path) {
  auto out = open_out(path);
  out << "entry,generator,k,realized_k,ill,labels\n";
  for (size_t i = 0; i < pool.entries.size(); ++i) {
    const auto& e = pool.entries[i];
    out << i << ',' << e.generator << ',' << e.k << ','
        << e.partition.n_clusters << ',' << (e.ill ? 1 : 0) << ',';
    for (size_t j = 0; j < e.partition.labels.size(); ++j) {
      if (j) out << ' ';
      out << e.partition.labels[j];
    }
    out << '\n';
  }
  finish(out, path);
}

RunReport read_run_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report file: " + path);
  json j = json::parse(in, nullptr, true);
  if (j.value("kind", "") != "run")
    throw InvalidSpec("not a run report: " + path);

  RunReport rep;
  const json& c = j.at("config");
  const json& dsj = c.at("dataset");
  rep.dataset = dsj.at("name").get<std::string>();
  rep.n = dsj.at("n").get<int>();
  rep.d = dsj.at("d").get<int>();
  rep.true_k = dsj.at("true_k").get<int>();
  const json& src = c.at("source");
  rep.source.path = src.at("path").get<std::string>();
  rep.source.header = src.at("header").get<std::string>();
  rep.source.label_column = src.at("label_column").get<std::string>();
  rep.source.normalize = src.at("normalize").get<bool>();
  const json& pj = c.at("pool");
  rep.config.pool.kmeans_count = pj.at("kmeans_count").get<int>();
  rep.config.pool.rpcl_count = pj.at("rpcl_count").get<int>();
  rep.config.pool.ill_ratio = pj.at("ill_ratio").get<double>();
  rep.config.pool.rpcl_learn_rate = pj.at("rpcl_learn_rate").get<double>();
  rep.config.pool.rpcl_delearn_rate = pj.at("rpcl_delearn_rate").get<double>();
  rep.config.ensemble_size = c.at("ensemble_size").get<int>();
  rep.config.runs = c.at("runs").get<int>();
  rep.config.methods = c.at("methods").get<std::vector<std::string>>();
  rep.config.alpha = c.at("alpha").get<double>();
  rep.config.beta = c.at("beta").get<double>();
  rep.config.k_mode = c.at("k_mode").get<std::string>();
  rep.config.k_min = c.at("k_min").get<int>();
  rep.config.k_max = c.at("k_max").get<int>();
  rep.config.seed = c.at("seed").get<std::uint64_t>();
  rep.config.max_n = c.at("max_n").get<int>();

  for (const auto& o : j.at("rows")) {
    ReportRow r;
    r.run = o.at("run").get<int>();
    r.kind = o.at("kind").get<std::string>();
    r.name = o.at("name").get<std::string>();
    r.k = o.at("k").get<int>();
    r.nmi = o.at("nmi").is_null()
                ? std::numeric_limits<double>::quiet_NaN()
                : o.at("nmi").get<double>();
    rep.rows.push_back(std::move(r));
  }
  for (const auto& o : j.at("aggregates")) {
    AggRow a;
    a.metric = o.at("metric").get<std::string>();
    a.method = o.at("method").get<std::string>();
    a.k = o.at("k").is_null() ? -1 : o.at("k").get<int>();
    a.value = o.at("value").is_null()
                  ? std::numeric_limits<double>::quiet_NaN()
                  : o.at("value").get<double>();
    rep.aggregates.push_back(std::move(a));
  }
  return rep;
}

void recompute_aggregates_file(const std::string& json_path,
                               const std::string& out_base) {
  RunReport rep = read_run_json(json_path);
  auto aggs = compute_aggregates(rep.rows, rep.config.methods,
                                 rep.config.k_min, rep.config.k_max,
                                 rep.true_k);
  write_agg_csv(aggs, out_base + ".agg.csv");
}

}  // namespace concord
