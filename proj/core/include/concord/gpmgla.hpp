#pragma once

#include <cstdint>
#include <memory>

#include "concord/bipartite.hpp"
#include "concord/tcut.hpp"

namespace concord {

struct GpmglaConfig {
  double alpha = 0.5;
  double beta = 2.0;
  SactOptions sact;
  TcutConfig tcut;
};

// Multi-granularity bipartite consensus: agreement profile + SACT + graph are
// built once, the reduced spectrum is solved once, and any number of k values
// reuse the basis (the experiment protocol evaluates many k per run).
class GpmglaSolver {
 public:
  GpmglaSolver(const Ensemble& e, const GpmglaConfig& cfg = {});
  GpmglaSolver(const GpmglaSolver&) = delete;
  GpmglaSolver& operator=(const GpmglaSolver&) = delete;

  // Exactly k non-empty instance clusters; 2 <= k <= min(n, n_c).
  Partition consensus(int k, std::uint64_t seed) const;

  const ConsensusGraph& graph() const { return graph_; }

 private:
  GpmglaConfig cfg_;
  ConsensusGraph graph_;
  std::unique_ptr<TcutBasis> basis_;
};

// One-shot convenience wrapper.
Partition gpmgla(const Ensemble& e, int k, double alpha, double beta,
                 std::uint64_t seed);

}  // namespace concord
