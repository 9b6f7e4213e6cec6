#include "concord/agreement.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace concord {

double nmi(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DimensionMismatch("nmi: partitions over different instance counts (" +
                            std::to_string(p.size()) + " vs " +
                            std::to_string(q.size()) + ")");
  const int n = p.size();
  const int kp = p.n_clusters, kq = q.n_clusters;
  if (kp == 1 || kq == 1) return 0.0;

  std::vector<long long> cont(static_cast<std::size_t>(kp) * kq, 0);
  std::vector<long long> np(kp, 0), nq(kq, 0);
  for (int i = 0; i < n; ++i) {
    ++cont[static_cast<std::size_t>(p.labels[i]) * kq + q.labels[i]];
    ++np[p.labels[i]];
    ++nq[q.labels[i]];
  }

  // Bijective match (identical up to relabeling): exact 1.0, no fp residue.
  if (kp == kq) {
    bool bijective = true;
    for (int a = 0; a < kp && bijective; ++a)
      for (int b = 0; b < kq; ++b) {
        const long long c = cont[static_cast<std::size_t>(a) * kq + b];
        if (c != 0 && (c != np[a] || c != nq[b])) {
          bijective = false;
          break;
        }
      }
    if (bijective) return 1.0;
  }

  const double dn = static_cast<double>(n);
  double num = 0.0;
  for (int a = 0; a < kp; ++a)
    for (int b = 0; b < kq; ++b) {
      const long long c = cont[static_cast<std::size_t>(a) * kq + b];
      if (c == 0) continue;  // 0·log0 = 0
      num += static_cast<double>(c) *
             std::log(dn * static_cast<double>(c) /
                      (static_cast<double>(np[a]) * static_cast<double>(nq[b])));
    }
  double hp = 0.0, hq = 0.0;
  for (int a = 0; a < kp; ++a)
    hp += static_cast<double>(np[a]) * std::log(static_cast<double>(np[a]) / dn);
  for (int b = 0; b < kq; ++b)
    hq += static_cast<double>(nq[b]) * std::log(static_cast<double>(nq[b]) / dn);
  const double denom = std::sqrt(hp * hq);  // hp, hq < 0 here; product > 0
  if (denom == 0.0) return 0.0;
  const double v = num / denom;
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double cai(const Ensemble& e, int i) {
  const int m = e.size();
  if (m < 2) throw InvalidSize("cai: ensemble must have M >= 2 members");
  if (i < 0 || i >= m)
    throw InvalidIndex("cai: member index " + std::to_string(i) +
                       " outside [0, " + std::to_string(m) + ")");
  double s = 0.0;
  for (int j = 0; j < m; ++j)
    if (j != i) s += nmi(e.members[i], e.members[j]);
  return s / static_cast<double>(m - 1);
}

AgreementProfile ncai(const Ensemble& e, double beta) {
  if (beta < 0.0) throw InvalidSpec("ncai: beta must be >= 0");
  validate(e);
  const int m = e.size();
  // Each unordered pair evaluated once; accumulate row sums symmetrically.
  std::vector<double> sums(m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double v = nmi(e.members[i], e.members[j]);
      sums[i] += v;
      sums[j] += v;
    }
  AgreementProfile prof;
  prof.beta = beta;
  prof.cai.resize(m);
  for (int i = 0; i < m; ++i) prof.cai[i] = sums[i] / static_cast<double>(m - 1);
  double mx = 0.0;
  for (double v : prof.cai) mx = std::max(mx, v);
  prof.ncai.resize(m);
  prof.influence.resize(m);
  if (mx == 0.0) {
    prof.all_zero_fallback = true;
    std::fprintf(stderr,
                 "warning: all pairwise member agreements are zero; "
                 "falling back to uniform weights\n");
    for (int i = 0; i < m; ++i) prof.ncai[i] = prof.influence[i] = 1.0;
    return prof;
  }
  for (int i = 0; i < m; ++i) {
    prof.ncai[i] = prof.cai[i] / mx;  // the argmax divides to exactly 1.0
    // beta = 0 gives influence 1 for every member (0^0 := 1; pow conforms).
    prof.influence[i] = beta == 0.0 ? 1.0 : std::pow(prof.ncai[i], beta);
  }
  return prof;
}

}  // namespace concord
