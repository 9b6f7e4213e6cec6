#pragma once

#include <vector>

#include "concord/ensemble.hpp"
#include "concord/partition.hpp"

namespace concord {

// Normalized mutual information between two hard partitions of the same
// instances, contingency-table based, natural log, 0·log0 = 0:
//
//   nmi(P,Q) = [Σ_ij n_ij ln(n·n_ij / (n_i·n_j))]
//              / sqrt([Σ_i n_i ln(n_i/n)] · [Σ_j n_j ln(n_j/n)])
//
// Degenerate rule: if either partition has exactly one cluster the entropy
// factor vanishes; nmi is defined as 0 (a constant partition carries no
// information), including the case where both are single-cluster.
// Partitions identical up to relabeling (k >= 2) return exactly 1.0.
// Result clamped to [0, 1].
double nmi(const Partition& p, const Partition& q);

// Crowd agreement of member i: mean NMI against the other M-1 members.
double cai(const Ensemble& e, int i);

// CAI/NCAI/influence for a whole ensemble. The pairwise NMI table is
// evaluated once per unordered pair; diagonal skipped.
struct AgreementProfile {
  std::vector<double> cai;        // in [0,1]
  std::vector<double> ncai;       // = cai / max cai; max entry is exactly 1
  std::vector<double> influence;  // = ncai^beta; beta = 0 gives all 1
  double beta = 0.0;
  bool all_zero_fallback = false;  // every pairwise NMI was 0; uniform weights used
};

// beta >= 0. If every CAI is zero the normalization in ncai is undefined;
// falls back to uniform ncai = influence = 1 and warns on stderr once.
AgreementProfile ncai(const Ensemble& e, double beta);

}  // namespace concord
