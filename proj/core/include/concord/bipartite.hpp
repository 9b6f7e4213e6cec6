#pragma once

#include <utility>
#include <vector>

#include "concord/agreement.hpp"
#include "concord/ensemble.hpp"
#include "concord/sact.hpp"

namespace concord {

// Bipartite consensus graph G = (U, V, L): U holds the n instances followed
// by the n_c clusters (every cluster appears twice in the graph), V holds the
// n_c clusters. Link weights:
//   instance u_i — cluster v_j:  α · influence(source(j))  if x_i ∈ C_j
//   cluster  u_{n+i} — cluster v_j:  SACT sim(i, j)  (diagonal 1 twin links)
//   otherwise absent.
// Zero-influence members contribute no instance links, so an instance row
// holds at most one nonzero per ensemble member. When the SACT similarity is
// the identity (raw_max = 0) the cluster rows are left empty: the instance
// block is then the only link block and the consensus is invariant under
// scaling α.
struct ConsensusGraph {
  int n = 0;    // instances
  int n_c = 0;  // clusters per side
  std::vector<std::vector<std::pair<int, double>>> b;  // (n + n_c) sparse rows

  int u_count() const { return n + n_c; }
  int v_count() const { return n_c; }
};

ConsensusGraph build_graph(const ClusterRegistry& reg,
                           const AgreementProfile& prof, const SactMatrix& sim,
                           double alpha);

ConsensusGraph build_graph(const Ensemble& e, double alpha, double beta,
                           const SactOptions& opt = {});

}  // namespace concord
