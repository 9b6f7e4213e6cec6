#include "concord/bipartite.hpp"

namespace concord {

ConsensusGraph build_graph(const ClusterRegistry& reg,
                           const AgreementProfile& prof, const SactMatrix& sim,
                           double alpha) {
  if (alpha <= 0.0) throw InvalidSpec("build_graph: alpha must be > 0");
  if (sim.n != reg.n_clusters)
    throw DimensionMismatch("build_graph: SACT matrix does not match registry");
  ConsensusGraph g;
  g.n = reg.n;
  g.n_c = reg.n_clusters;
  g.b.resize(g.u_count());

  for (int i = 0; i < reg.n; ++i) {
    auto& row = g.b[i];
    row.reserve(reg.containing[i].size());
    for (int c : reg.containing[i]) {
      const double w = alpha * prof.influence[reg.source[c]];
      if (w > 0.0) row.emplace_back(c, w);
    }
    // containing lists run member-by-member and cluster ids grow with member
    // index, so rows are already sorted by column
  }

  if (sim.raw_max == 0.0) return g;  // identity SACT: no cluster rows at all

  for (int i = 0; i < g.n_c; ++i) {
    auto& row = g.b[reg.n + i];
    row.reserve(sim.rows[i].size() + 1);
    bool placed_diag = false;
    for (const auto& [j, v] : sim.rows[i]) {
      if (!placed_diag && j > i) {
        row.emplace_back(i, 1.0);  // twin link between the two copies
        placed_diag = true;
      }
      row.emplace_back(j, v);
    }
    if (!placed_diag) row.emplace_back(i, 1.0);
  }
  return g;
}

ConsensusGraph build_graph(const Ensemble& e, double alpha, double beta,
                           const SactOptions& opt) {
  const ClusterRegistry reg = build_registry(e);
  const AgreementProfile prof = ncai(e, beta);
  const SactMatrix sim = sact(reg, prof, opt);
  return build_graph(reg, prof, sim, alpha);
}

}  // namespace concord
