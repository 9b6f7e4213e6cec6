#include "concord/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "concord/errors.hpp"
#include "concord/text.hpp"

namespace concord {
namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    out.push_back(trim(std::string_view(line).substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

bool is_numeric(const std::string& tok) {
  double v;
  return !tok.empty() && parse_double(tok, v);
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

Dataset load_dataset(const std::string& path, const LoadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);

  // Keep original 1-based line numbers for diagnostics; blank lines are
  // skipped but still counted.
  std::vector<std::pair<size_t, std::string>> lines;
  {
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (trim(raw).empty()) continue;
      lines.emplace_back(lineno, raw);
    }
  }
  if (lines.empty()) throw IngestError("empty dataset file: " + path);

  const char delim =
      lines.front().second.find('\t') != std::string::npos ? '\t' : ',';

  auto first = split_line(lines.front().second, delim);
  bool has_header;
  if (opt.header == "yes") {
    has_header = true;
  } else if (opt.header == "no") {
    has_header = false;
  } else if (opt.header == "auto") {
    bool all_non_numeric = std::none_of(first.begin(), first.end(), is_numeric);
    bool mixed_signal = false;
    if (lines.size() > 1) {
      auto second = split_line(lines[1].second, delim);
      for (size_t c = 0; c < first.size() && c < second.size(); ++c)
        if (!is_numeric(first[c]) && is_numeric(second[c])) mixed_signal = true;
    }
    has_header = all_non_numeric || mixed_signal;
  } else {
    throw InvalidSpec("header option must be auto, yes, or no");
  }

  std::vector<std::string> header;
  size_t data_begin = 0;
  if (has_header) {
    header = first;
    data_begin = 1;
    if (lines.size() == 1) throw IngestError("header-only dataset file: " + path);
  }
  const size_t width = has_header
                           ? split_line(lines[data_begin].second, delim).size()
                           : first.size();
  if (has_header && header.size() != width)
    throw IngestError("header has " + std::to_string(header.size()) +
                      " columns but row " +
                      std::to_string(lines[data_begin].first) + " has " +
                      std::to_string(width));

  // Resolve the label column before parsing so feature width is known.
  long label_col = -1;  // -1 = none
  if (opt.label_column == "last") {
    label_col = static_cast<long>(width) - 1;
  } else if (opt.label_column == "none") {
    label_col = -1;
  } else {
    double as_num;
    if (parse_double(opt.label_column, as_num) &&
        as_num == static_cast<long>(as_num)) {
      label_col = static_cast<long>(as_num);
      if (label_col < 0 || label_col >= static_cast<long>(width))
        throw InvalidSpec("label column index " + opt.label_column +
                          " out of range for " + std::to_string(width) +
                          " columns");
    } else {
      if (!has_header)
        throw InvalidSpec("label column named '" + opt.label_column +
                          "' requires a header row");
      auto it = std::find(header.begin(), header.end(), opt.label_column);
      if (it == header.end())
        throw InvalidSpec("label column '" + opt.label_column +
                          "' not found in header");
      label_col = static_cast<long>(it - header.begin());
    }
  }
  const size_t d = width - (label_col >= 0 ? 1 : 0);
  if (d == 0) throw IngestError("dataset has no feature columns: " + path);

  Dataset ds;
  ds.name = opt.name.empty() ? stem_of(path) : opt.name;
  ds.d = static_cast<int>(d);

  std::vector<std::string> raw_labels;
  std::vector<std::string> problems;
  auto complain = [&](const std::string& what) {
    if (problems.size() < 10) problems.push_back(what);
  };

  for (size_t r = data_begin; r < lines.size(); ++r) {
    auto toks = split_line(lines[r].second, delim);
    const std::string lineno = std::to_string(lines[r].first);
    if (toks.size() != width) {
      complain("line " + lineno + ": expected " + std::to_string(width) +
               " columns, found " + std::to_string(toks.size()));
      continue;
    }
    for (size_t c = 0; c < width; ++c) {
      if (static_cast<long>(c) == label_col) {
        if (toks[c].empty())
          complain("line " + lineno + ": empty label cell");
        else
          raw_labels.push_back(toks[c]);
        continue;
      }
      double v;
      if (toks[c].empty()) {
        complain("line " + lineno + ": missing value in column " +
                 std::to_string(c));
      } else if (!parse_double(toks[c], v)) {
        complain("line " + lineno + ": non-numeric value '" + toks[c] +
                 "' in column " + std::to_string(c));
      } else {
        ds.features.push_back(v);
      }
    }
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << path << ": " << problems.size() << (problems.size() == 10 ? "+" : "")
        << " malformed cell(s)";
    for (const auto& p : problems) msg << "\n  " << p;
    throw IngestError(msg.str());
  }

  ds.n = static_cast<int>(ds.features.size() / d);
  if (ds.n == 0) throw IngestError("no data rows in dataset file: " + path);

  if (label_col >= 0) {
    // Canonicalize label strings to dense 0-based ids. All-numeric labels
    // order by value (so "2" and "2.0" collapse); otherwise lexicographic.
    bool numeric = std::all_of(raw_labels.begin(), raw_labels.end(), is_numeric);
    ds.labels.resize(ds.n);
    if (numeric) {
      std::map<double, int> ids;
      std::vector<double> vals(raw_labels.size());
      for (size_t i = 0; i < raw_labels.size(); ++i) {
        parse_double(raw_labels[i], vals[i]);
        ids.emplace(vals[i], 0);
      }
      int next = 0;
      for (auto& kv : ids) kv.second = next++;
      for (int i = 0; i < ds.n; ++i) ds.labels[i] = ids[vals[i]];
    } else {
      std::map<std::string, int> ids;
      for (const auto& s : raw_labels) ids.emplace(s, 0);
      int next = 0;
      for (auto& kv : ids) kv.second = next++;
      for (int i = 0; i < ds.n; ++i) ds.labels[i] = ids[raw_labels[i]];
    }
    int k = 0;
    for (int i = 0; i < ds.n; ++i) k = std::max(k, ds.labels[i] + 1);
    ds.n_classes = k;
  }

  if (opt.normalize) zscore(ds);
  return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write dataset file: " + path);
  for (int c = 0; c < ds.d; ++c) out << 'f' << c << ',';
  out << "label\n";
  for (int i = 0; i < ds.n; ++i) {
    for (int c = 0; c < ds.d; ++c)
      out << format_double(ds.features[static_cast<size_t>(i) * ds.d + c])
          << ',';
    out << (i < static_cast<int>(ds.labels.size()) ? ds.labels[i] : 0) << '\n';
  }
  if (!out) throw IoError("failed writing dataset file: " + path);
}

}  // namespace concord
