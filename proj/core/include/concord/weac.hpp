#pragma once

#include "concord/coassociation.hpp"
#include "concord/linkage.hpp"

namespace concord {

// Weighted evidence accumulation: crowd-agreement-weighted co-association
// followed by an agglomerative cut at k. beta = 0 weighs members uniformly,
// which is plain evidence accumulation (EAC).
Partition weac(const Ensemble& e, double beta, Linkage kind, int k,
               int max_n = 20000);

}  // namespace concord
