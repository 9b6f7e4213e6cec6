#pragma once

#include <vector>

#include "concord/errors.hpp"
#include "concord/partition.hpp"

namespace concord {

// Ordered list of M >= 2 partitions over one instance set.
struct Ensemble {
  std::vector<Partition> members;

  int size() const { return static_cast<int>(members.size()); }
  int n() const { return members.empty() ? 0 : members.front().size(); }
};

// Throws unless M >= 2, all members share n, and each member is dense 0-based.
void validate(const Ensemble& e);

// Flattened cluster set across all members, listed member-by-member.
struct ClusterRegistry {
  int n = 0;               // instances
  int n_clusters = 0;      // n_c = sum of member cluster counts
  std::vector<int> offset;                  // member -> first global cluster id
  std::vector<int> source;                  // cluster -> owning member index
  std::vector<std::vector<int>> members;    // cluster -> sorted instance ids
  std::vector<std::vector<int>> containing; // instance -> its M containing clusters

  int cluster_size(int c) const { return static_cast<int>(members[c].size()); }
};

ClusterRegistry build_registry(const Ensemble& e);

}  // namespace concord
