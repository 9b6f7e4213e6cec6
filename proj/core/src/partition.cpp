#include "concord/partition.hpp"

#include <algorithm>

namespace concord {

Partition partition_from_labels(const std::vector<int>& raw_labels) {
  if (raw_labels.empty())
    throw InvalidPartition("partition_from_labels: empty label sequence");
  std::vector<int> distinct(raw_labels);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Partition p;
  p.n_clusters = static_cast<int>(distinct.size());
  p.labels.resize(raw_labels.size());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    p.labels[i] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), raw_labels[i]) -
        distinct.begin());
  }
  return p;
}

std::vector<std::vector<int>> clusters_of(const Partition& p) {
  std::vector<std::vector<int>> out(p.n_clusters);
  for (int i = 0; i < p.size(); ++i) out[p.labels[i]].push_back(i);
  return out;  // instance ids pushed in ascending order: already sorted
}

}  // namespace concord
