#pragma once

#include <vector>

#include "concord/agreement.hpp"
#include "concord/ensemble.hpp"
#include "concord/symmetric.hpp"

namespace concord {

// Weighted co-association: values(i,j) = Σ_l w_l · [i,j share a cluster in
// member l], with w_l = influence_l / Σ influence. Implemented by summing raw
// influences per pair and dividing once by the total, so the β = 0 path
// (influence ≡ 1) produces exactly count/M — bit-identical to the plain
// average of the member co-membership matrices. Diagonal is exactly 1.
struct CoAssociationMatrix {
  SymMatrix values;
  std::vector<double> weights;  // the normalized w_l, sum 1
};

// Dense n(n+1)/2 doubles: refuse beyond max_n instances.
CoAssociationMatrix weighted_coassociation(const Ensemble& e,
                                           const AgreementProfile& prof,
                                           int max_n = 20000);

// Convenience: profile computed here from beta.
CoAssociationMatrix weighted_coassociation(const Ensemble& e, double beta,
                                           int max_n = 20000);

}  // namespace concord
