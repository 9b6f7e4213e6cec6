#include "concord/tcut.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

#include "concord/errors.hpp"
#include "concord/kmeans.hpp"

namespace concord {

TcutBasis::TcutBasis(const ConsensusGraph& g, const TcutConfig& cfg) : g_(&g) {
  const int nc = g.v_count();
  const int u = g.u_count();
  if (nc < 1) throw InvalidSpec("tcut: graph has no V nodes");

  d_u_.assign(u, cfg.epsilon);
  Eigen::VectorXd d_v = Eigen::VectorXd::Constant(nc, cfg.epsilon);
  for (int i = 0; i < u; ++i)
    for (const auto& [j, w] : g.b[i]) {
      d_u_[i] += w;
      d_v(j) += w;
    }

  // W = Bᵀ D_U⁻¹ B accumulated row by row (outer products of sparse rows).
  Eigen::MatrixXd w_mat = Eigen::MatrixXd::Zero(nc, nc);
  for (int i = 0; i < u; ++i) {
    const double inv_d = 1.0 / d_u_[i];
    const auto& row = g_->b[i];
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t b = a; b < row.size(); ++b) {
        const double v = row[a].second * row[b].second * inv_d;
        w_mat(row[a].first, row[b].first) += v;
        if (a != b) w_mat(row[b].first, row[a].first) += v;
      }
  }

  Eigen::MatrixXd a_mat = Eigen::MatrixXd(d_v.asDiagonal()) - w_mat;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
      a_mat, Eigen::MatrixXd(d_v.asDiagonal()));
  if (es.info() != Eigen::Success)
    throw SpectralFailure("tcut: generalized eigensolver failed (n_c=" +
                          std::to_string(nc) + ")");
  if (es.eigenvalues()(0) < -1e-10)
    throw SpectralFailure("tcut: negative eigenvalue " +
                          std::to_string(es.eigenvalues()(0)));

  evals_.assign(es.eigenvalues().data(), es.eigenvalues().data() + nc);
  f_v_.resize(static_cast<std::size_t>(nc) * nc);
  for (int r = 0; r < nc; ++r)
    for (int c = 0; c < nc; ++c)
      f_v_[static_cast<std::size_t>(r) * nc + c] = es.eigenvectors()(r, c);
}

std::vector<double> TcutBasis::embed(int k, bool all_nodes) const {
  const int nc = dim();
  if (k < 1 || k > nc)
    throw InvalidK("tcut: k=" + std::to_string(k) +
                   " exceeds the reduced dimension n_c=" + std::to_string(nc));
  const int n_rows = all_nodes ? g_->u_count() + g_->v_count() : g_->n;
  const int u_rows = all_nodes ? g_->u_count() : g_->n;

  // A reduced eigenpair (γ, f) with fᵀD_V f = 1 lifts to the full bipartite
  // normalized-cut eigenpair λ = 1 − sqrt(1−γ),
  //   z = ( D_U⁻¹ B f / sqrt(2(1−γ)),  f / sqrt(2) ),   zᵀ D z = 1,
  // so the rows built here equal the full-graph spectral embedding rows
  // exactly, up to eigenvector sign.
  std::vector<double> cu(k);
  const double cv = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < k; ++j) {
    const double a = std::max(1.0 - std::max(evals_[j], 0.0), 0.0);
    cu[j] = 1.0 / std::sqrt(std::max(2.0 * a, 1e-18));
  }

  std::vector<double> x(static_cast<std::size_t>(n_rows) * k, 0.0);
  for (int i = 0; i < u_rows; ++i) {
    double* row = &x[static_cast<std::size_t>(i) * k];
    const double inv_d = 1.0 / d_u_[i];
    for (const auto& [c, w] : g_->b[i]) {
      const double* f = &f_v_[static_cast<std::size_t>(c) * nc];
      const double s = w * inv_d;
      for (int j = 0; j < k; ++j) row[j] += s * f[j];
    }
    for (int j = 0; j < k; ++j) row[j] *= cu[j];
  }
  if (all_nodes) {
    for (int vtx = 0; vtx < g_->v_count(); ++vtx) {
      double* row = &x[static_cast<std::size_t>(g_->u_count() + vtx) * k];
      const double* f = &f_v_[static_cast<std::size_t>(vtx) * nc];
      for (int j = 0; j < k; ++j) row[j] = cv * f[j];
    }
  }
  // Unit rows; all-zero rows (isolated nodes) stay zero.
  for (int i = 0; i < n_rows; ++i) {
    double* row = &x[static_cast<std::size_t>(i) * k];
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += row[j] * row[j];
    if (s > 0.0) {
      const double inv = 1.0 / std::sqrt(s);
      for (int j = 0; j < k; ++j) row[j] *= inv;
    }
  }
  return x;
}

std::vector<double> TcutBasis::instance_embedding(int k) const {
  return embed(k, false);
}

std::vector<double> TcutBasis::node_embedding(int k) const {
  return embed(k, true);
}

std::vector<int> tcut(const ConsensusGraph& g, int k, std::uint64_t seed,
                      const TcutConfig& cfg) {
  if (k < 2) throw InvalidK("tcut: k must be >= 2");
  TcutBasis basis(g, cfg);
  const std::vector<double> all = basis.node_embedding(k);

  // Cluster the instance rows only; every group is then a real instance group.
  std::vector<double> inst(all.begin(), all.begin() + static_cast<std::size_t>(g.n) * k);
  KMeansConfig kc;
  kc.restarts = cfg.kmeans_restarts;
  kc.max_iter = cfg.kmeans_max_iter;
  kc.tol = cfg.kmeans_tol;
  kc.seed = seed;
  const KMeansResult km = kmeans(inst, g.n, k, k, kc);

  const int total = g.u_count() + g.v_count();
  std::vector<int> assign(total);
  for (int i = 0; i < g.n; ++i) assign[i] = km.partition.labels[i];
  for (int i = g.n; i < total; ++i) {
    const double* row = &all[static_cast<std::size_t>(i) * k];
    double best = std::numeric_limits<double>::infinity();
    int bc = 0;
    for (int c = 0; c < k; ++c) {
      const double* cc = &km.centroids[static_cast<std::size_t>(c) * k];
      double d2 = 0.0;
      for (int j = 0; j < k; ++j) {
        const double diff = row[j] - cc[j];
        d2 += diff * diff;
      }
      if (d2 < best) {
        best = d2;
        bc = c;
      }
    }
    assign[i] = bc;
  }
  return assign;
}

}  // namespace concord
