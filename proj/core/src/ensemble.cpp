#include "concord/ensemble.hpp"

#include <string>

namespace concord {

void validate(const Ensemble& e) {
  if (e.size() < 2)
    throw InvalidSize("ensemble: need at least 2 members, got " +
                      std::to_string(e.size()));
  const int n = e.n();
  if (n == 0) throw InvalidPartition("ensemble: empty member partition");
  for (int m = 0; m < e.size(); ++m) {
    const Partition& p = e.members[m];
    if (p.size() != n)
      throw DimensionMismatch("ensemble: member " + std::to_string(m) +
                              " has n=" + std::to_string(p.size()) +
                              ", expected " + std::to_string(n));
    std::vector<char> seen(p.n_clusters, 0);
    for (int v : p.labels) {
      if (v < 0 || v >= p.n_clusters)
        throw InvalidPartition("ensemble: member " + std::to_string(m) +
                               " has label outside [0, n_clusters)");
      seen[v] = 1;
    }
    for (int c = 0; c < p.n_clusters; ++c)
      if (!seen[c])
        throw InvalidPartition("ensemble: member " + std::to_string(m) +
                               " has empty cluster " + std::to_string(c));
  }
}

ClusterRegistry build_registry(const Ensemble& e) {
  validate(e);
  ClusterRegistry r;
  r.n = e.n();
  r.offset.reserve(e.size());
  for (const Partition& p : e.members) {
    r.offset.push_back(r.n_clusters);
    r.n_clusters += p.n_clusters;
  }
  r.source.resize(r.n_clusters);
  r.members.resize(r.n_clusters);
  r.containing.assign(r.n, {});
  for (int i = 0; i < r.n; ++i) r.containing[i].reserve(e.size());
  for (int m = 0; m < e.size(); ++m) {
    const Partition& p = e.members[m];
    const int base = r.offset[m];
    for (int c = 0; c < p.n_clusters; ++c) r.source[base + c] = m;
    for (int i = 0; i < r.n; ++i) {
      const int g = base + p.labels[i];
      r.members[g].push_back(i);  // ascending i: member lists stay sorted
      r.containing[i].push_back(g);
    }
  }
  return r;
}

}  // namespace concord
