#include "concord/gpmgla.hpp"

#include <string>

#include "concord/kmeans.hpp"

namespace concord {

GpmglaSolver::GpmglaSolver(const Ensemble& e, const GpmglaConfig& cfg)
    : cfg_(cfg), graph_(build_graph(e, cfg.alpha, cfg.beta, cfg.sact)) {
  basis_ = std::make_unique<TcutBasis>(graph_, cfg_.tcut);
}

Partition GpmglaSolver::consensus(int k, std::uint64_t seed) const {
  if (k < 2 || k > graph_.n)
    throw InvalidK("gpmgla: k=" + std::to_string(k) + " outside [2, n=" +
                   std::to_string(graph_.n) + "]");
  const std::vector<double> inst = basis_->instance_embedding(k);  // throws if k > n_c
  KMeansConfig kc;
  kc.restarts = cfg_.tcut.kmeans_restarts;
  kc.max_iter = cfg_.tcut.kmeans_max_iter;
  kc.tol = cfg_.tcut.kmeans_tol;
  kc.seed = seed;
  const KMeansResult km = kmeans(inst, graph_.n, k, k, kc);
  return partition_from_labels(km.partition.labels);
}

Partition gpmgla(const Ensemble& e, int k, double alpha, double beta,
                 std::uint64_t seed) {
  GpmglaConfig cfg;
  cfg.alpha = alpha;
  cfg.beta = beta;
  return GpmglaSolver(e, cfg).consensus(k, seed);
}

}  // namespace concord
