#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concord/partition.hpp"

namespace concord {

struct Dataset {
  std::string name;
  int n = 0;
  int d = 0;
  std::vector<double> features;  // n × d row-major
  std::vector<int> labels;       // empty when unlabeled; else 0-based class ids
  int n_classes = 0;

  bool has_labels() const { return !labels.empty(); }
  Partition truth() const;  // throws when unlabeled
};

// Per-attribute z-score using the population standard deviation; constant
// attributes become all-zero instead of dividing by zero.
void zscore(Dataset& ds);

// First m rows (features and labels). Class ids are kept as-is.
Dataset prefix(const Dataset& ds, int m);

// Synthetic Gaussian mixture: k components on a well-separated grid
// (spacing 6·spread per axis), equal mixing, component drawn per row so any
// prefix stays balanced. Labels are the component ids.
Dataset gaussian_mixture(int n, int d, int k, double spread, std::uint64_t seed,
                         const std::string& name = "synthetic");

}  // namespace concord
