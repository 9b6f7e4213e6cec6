#pragma once

#include <utility>
#include <vector>

#include "concord/agreement.hpp"
#include "concord/ensemble.hpp"

namespace concord {

// |A ∩ B| / |A ∪ B| for sorted id lists. Clusters from the same partition are
// disjoint, so their Jaccard is always 0.
double jaccard(const std::vector<int>& a, const std::vector<int>& b);

// neighbors(i) = clusters sharing at least one instance with i (i itself
// included). Built from the per-instance containing-cluster lists: O(n·M²).
// Lists sorted ascending.
std::vector<std::vector<int>> neighbor_lists(const ClusterRegistry& reg);

struct SactOptions {
  // The mediator sum runs over every cluster k, including k = i and k = j.
  // true switches to the exclusive reading (k != i, k != j) for sensitivity
  // checks; default is the literal sum.
  bool exclude_endpoints = false;
};

// Source-aware connected-triple similarity between clusters:
//
//   raw(i,j)  = Σ_k influence(source(k)) · min(J(i,k), J(j,k))
//   sim(i,j)  = 1                  if i == j
//             = raw(i,j)/raw_max   otherwise, raw_max = max_{x!=y} raw(x,y)
//
// Only pairs with a common neighbor have nonzero raw, so rows hold sparse
// off-diagonal entries; the diagonal 1 is implicit. raw_max = 0 (no pair
// shares a mediator) leaves every row empty: sim is the identity.
struct SactMatrix {
  int n = 0;  // cluster count n_c
  double raw_max = 0.0;
  std::vector<std::vector<std::pair<int, double>>> rows;  // sorted by column

  // 1 on the diagonal, 0 for absent pairs.
  double at(int i, int j) const;
};

SactMatrix sact(const ClusterRegistry& reg, const AgreementProfile& prof,
                const SactOptions& opt = {});

}  // namespace concord
