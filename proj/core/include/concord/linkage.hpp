#pragma once

#include <vector>

#include "concord/errors.hpp"
#include "concord/partition.hpp"
#include "concord/symmetric.hpp"

namespace concord {

enum class Linkage { single, average, complete };

// Similarity of the freshly merged cluster (sizes na, nb) to another cluster
// whose similarities to the two halves were sa, sb. Single: max, complete:
// min, average: member-count-weighted mean (UPGMA) — so linkage on a
// co-association matrix equals linkage on the underlying instance pairs.
// One shared expression: every implementation of the same merge sequence
// produces bit-identical values, which the exact tie-break below relies on.
inline double merged_similarity(Linkage kind, double sa, double sb, double na,
                                double nb) {
  switch (kind) {
    case Linkage::single: return sa > sb ? sa : sb;
    case Linkage::complete: return sa < sb ? sa : sb;
    case Linkage::average: return (na * sa + nb * sb) / (na + nb);
  }
  return 0.0;  // unreachable
}

// One merge step: slots are cluster representatives; a cluster keeps the
// smaller of the two merged slot ids, so left < right and left survives.
struct Merge {
  int left;
  int right;
  double height;  // the similarity at which the pair merged
};

// Full dendrogram: n-1 merges, heights non-increasing. Greedy rule: merge
// the globally most similar active pair; ties (bit-equal similarities) go to
// the lexicographically smallest (min slot id, then min partner id).
struct LinkageTree {
  int n = 0;
  Linkage kind = Linkage::average;
  std::vector<Merge> merges;
};

// Agglomerate a symmetric similarity matrix. Takes the matrix by value: it is
// consumed as working storage (pass std::move when the caller is done with it).
// Nearest-neighbor row caches keep typical cost ~O(n²).
LinkageTree linkage_cluster(SymMatrix sim, Linkage kind);

// Partition after n-k merges. Nested: cut(k) coarsens cut(k+1).
Partition cut(const LinkageTree& t, int k);

}  // namespace concord
