#pragma once

#include <cstdint>
#include <vector>

#include "concord/bipartite.hpp"

namespace concord {

struct TcutConfig {
  double epsilon = 1e-12;  // degree regularization for isolated nodes
  int kmeans_restarts = 10;
  int kmeans_max_iter = 100;
  double kmeans_tol = 1e-6;
};

// Transfer cut: normalized-cut spectral clustering of the bipartite graph
// solved entirely on the small side. With D_U, D_V the (regularized) degree
// diagonals, the reduced generalized eigenproblem
//
//   (D_V − Bᵀ D_U⁻¹ B) f = λ D_V f
//
// is solved once for the full spectrum; eigenvectors transfer to U-nodes via
// f_U = D_U⁻¹ B f_V. A reduced eigenpair (λ, f) corresponds to the full-graph
// normalized-cut eigenvalue 1 − sqrt(1−λ) (same ascending order), and scaling
// the lifted column by 1/sqrt(2(1−λ)) (V-side by 1/sqrt(2)) reproduces the
// full-graph eigenvector rows exactly, up to column sign — the reduced solve
// is exact, not an approximation, which is the entire speed story: the
// eigenproblem dimension is n_c, never n + 2·n_c.
class TcutBasis {
 public:
  // The graph must outlive the basis.
  explicit TcutBasis(const ConsensusGraph& g, const TcutConfig& cfg = {});
  TcutBasis(const TcutBasis&) = delete;
  TcutBasis& operator=(const TcutBasis&) = delete;

  int dim() const { return static_cast<int>(evals_.size()); }
  const std::vector<double>& eigenvalues() const { return evals_; }

  // Unit-normalized embedding rows of the n instance nodes, row-major n×k.
  std::vector<double> instance_embedding(int k) const;
  // Same for all u_count + v_count nodes (instances, cluster copies, clusters).
  std::vector<double> node_embedding(int k) const;

 private:
  std::vector<double> embed(int k, bool all_nodes) const;

  const ConsensusGraph* g_;
  std::vector<double> d_u_;    // regularized U degrees
  std::vector<double> evals_;  // ascending, size n_c
  std::vector<double> f_v_;    // n_c × n_c row-major, D_V-orthonormal columns
};

// Assignment of all U ∪ V nodes to k groups: seeded k-means (k-means++ init,
// multi-restart) on the instance rows; cluster and V nodes inherit the group
// of their nearest centroid (reporting only — instances alone define the
// consensus partition).
std::vector<int> tcut(const ConsensusGraph& g, int k, std::uint64_t seed,
                      const TcutConfig& cfg = {});

}  // namespace concord
