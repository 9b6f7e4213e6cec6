#include "concord/weac.hpp"

#include <string>
#include <utility>

namespace concord {

Partition weac(const Ensemble& e, double beta, Linkage kind, int k, int max_n) {
  if (k < 1 || k > e.n())
    throw InvalidK("weac: k=" + std::to_string(k) + " outside [1, n]");
  CoAssociationMatrix ca = weighted_coassociation(e, beta, max_n);
  const LinkageTree tree = linkage_cluster(std::move(ca.values), kind);
  return cut(tree, k);
}

}  // namespace concord
