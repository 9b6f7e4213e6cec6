#pragma once

#include <vector>

#include "concord/errors.hpp"

namespace concord {

// Hard clustering of n instances. labels are dense 0-based: every value in
// [0, n_clusters) occurs at least once, so clusters are non-empty, disjoint,
// and cover the dataset.
struct Partition {
  std::vector<int> labels;
  int n_clusters = 0;

  int size() const { return static_cast<int>(labels.size()); }
};

// Canonicalize raw labels: distinct raw values map to 0..k-1 in ascending
// raw-label order. Co-membership is preserved; idempotent.
Partition partition_from_labels(const std::vector<int>& raw_labels);

// Member lists per cluster, each sorted ascending. Deterministic iteration
// order for everything downstream.
std::vector<std::vector<int>> clusters_of(const Partition& p);

}  // namespace concord
