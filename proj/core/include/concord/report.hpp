#pragma once

#include <string>

#include "concord/experiment.hpp"
#include "concord/pool.hpp"

namespace concord {

// Report files per experiment base path <base>:
//   <base>.rows.csv   run,kind,name,k,nmi — one row per scored cell
//   <base>.agg.csv    metric,method,k,value — k empty for whole-run metrics
//   <base>.json       schema_version, kind, config echo, aggregates, rows
//   <base>.times.csv  wall-clock sidecar (run,method,seconds)
// Every file except the times sidecar is a pure function of (config, seed):
// re-running the same experiment reproduces those bytes exactly. Floats are
// written in shortest round-trip form, so a reader recovers the exact values.
void write_run_report(const RunReport& rep, const std::string& base);

// Ill-ratio sweep: <base>.ill<i>.rows.csv / .agg.csv per ratio,
// <base>.series.csv (x,method,mean,stderr,count at the true k), <base>.json,
// and the <base>.times.csv sidecar (x,run,method,seconds).
void write_sweep_ill(const SweepIllReport& sweep, const std::string& base);

// Timing sweep: <base>.times.csv carries the measurements
// (x,method,median,mean,stderr,rep1,rep2,rep3,skipped); <base>.json holds the
// deterministic part (config, sizes, skip flags) and no times.
void write_sweep_time(const SweepTimeReport& sweep, const std::string& base);

// Pool inventory: entry,generator,k,realized_k,ill,labels (labels
// space-separated). Deterministic for a given (dataset, spec, seed).
void write_pool_csv(const Pool& pool, const std::string& path);

// Parses a run JSON back into a report (aggregates are reparsed as-is; rows
// round-trip bit-exactly).
RunReport read_run_json(const std::string& path);

// Recomputes aggregates from the rows embedded in a run JSON and writes
// <out_base>.agg.csv — byte-identical to the original aggregates file.
void recompute_aggregates_file(const std::string& json_path,
                               const std::string& out_base);

}  // namespace concord
