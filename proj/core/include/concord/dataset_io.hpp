#pragma once

#include <string>

#include "concord/dataset.hpp"

namespace concord {

struct LoadOptions {
  // "auto": header when the first line is entirely non-numeric, or has a
  // non-numeric token where the second line is numeric. "yes"/"no" force it.
  std::string header = "auto";
  // "last" (default), "none", a 0-based column index, or a header name.
  std::string label_column = "last";
  bool normalize = true;  // per-attribute z-score after ingestion
  std::string name;       // defaults to the file stem
};

// Delimited text (comma/tab autodetected), features numeric, optional label
// column canonicalized to 0-based class ids (numeric labels sort numerically,
// anything else lexicographically). Missing or non-numeric cells and ragged
// rows raise IngestError naming the offending 1-based line numbers.
Dataset load_dataset(const std::string& path, const LoadOptions& opt = {});

// Feature matrix + label column back to disk (CSV with header); used by the
// synthetic-data subcommand.
void save_dataset(const Dataset& ds, const std::string& path);

}  // namespace concord
