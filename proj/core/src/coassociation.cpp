#include "concord/coassociation.hpp"

#include <string>

namespace concord {

CoAssociationMatrix weighted_coassociation(const Ensemble& e,
                                           const AgreementProfile& prof,
                                           int max_n) {
  validate(e);
  const int n = e.n();
  if (n > max_n)
    throw MemoryGuard("coassociation: n=" + std::to_string(n) +
                      " exceeds the dense-matrix cap of " + std::to_string(max_n));
  if (static_cast<int>(prof.influence.size()) != e.size())
    throw DimensionMismatch("coassociation: profile/ensemble member count mismatch");

  double total = 0.0;
  for (double v : prof.influence) total += v;
  if (total <= 0.0)
    throw InvalidSpec("coassociation: total influence must be positive");

  CoAssociationMatrix out;
  out.values = SymMatrix(n, 0.0);
  std::vector<double>& a = out.values.packed();

  // Accumulate raw influence per co-clustered pair, member order fixed.
  for (int l = 0; l < e.size(); ++l) {
    const double w = prof.influence[l];
    if (w == 0.0) continue;
    const std::vector<std::vector<int>> cl = clusters_of(e.members[l]);
    for (const std::vector<int>& c : cl) {
      for (std::size_t x = 0; x < c.size(); ++x) {
        const int i = c[x];
        // Packed row i spans idx(i,i)..idx(i,n-1) contiguously.
        const std::size_t row =
            static_cast<std::size_t>(i) * (2 * static_cast<std::size_t>(n) - i - 1) / 2;
        for (std::size_t y = x; y < c.size(); ++y) a[row + c[y]] += w;
      }
    }
  }
  // Divide, never multiply by a reciprocal: with influence ≡ 1 this is
  // count/M exactly, and the diagonal is total/total = 1.0 for any β.
  for (double& v : a) v /= total;

  out.weights.resize(e.size());
  for (int l = 0; l < e.size(); ++l) out.weights[l] = prof.influence[l] / total;
  return out;
}

CoAssociationMatrix weighted_coassociation(const Ensemble& e, double beta,
                                           int max_n) {
  return weighted_coassociation(e, ncai(e, beta), max_n);
}

}  // namespace concord
