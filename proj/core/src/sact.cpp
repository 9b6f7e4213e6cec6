#include "concord/sact.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace concord {

double jaccard(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0, inter = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++inter; ++i; ++j; }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<std::vector<int>> neighbor_lists(const ClusterRegistry& reg) {
  std::vector<std::vector<int>> nb(reg.n_clusters);
  for (int i = 0; i < reg.n; ++i) {
    const std::vector<int>& cs = reg.containing[i];
    for (int a : cs)
      for (int b : cs) nb[a].push_back(b);
  }
  for (auto& lst : nb) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }
  return nb;
}

double SactMatrix::at(int i, int j) const {
  if (i == j) return 1.0;
  const auto& row = rows[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, double>& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == j) ? it->second : 0.0;
}

SactMatrix sact(const ClusterRegistry& reg, const AgreementProfile& prof,
                const SactOptions& opt) {
  if (static_cast<int>(prof.influence.size()) != static_cast<int>(reg.offset.size()))
    throw DimensionMismatch("sact: profile covers " +
                            std::to_string(prof.influence.size()) +
                            " members, registry has " +
                            std::to_string(reg.offset.size()));
  const int nc = reg.n_clusters;
  const std::vector<std::vector<int>> nb = neighbor_lists(reg);

  // Sparse Jaccard rows: J(i,k) is nonzero exactly for k in neighbors(i).
  std::vector<std::vector<std::pair<int, double>>> jrow(nc);
  for (int i = 0; i < nc; ++i) {
    jrow[i].reserve(nb[i].size());
    for (int k : nb[i])
      jrow[i].emplace_back(k, k == i ? 1.0 : jaccard(reg.members[i], reg.members[k]));
  }

  // Candidate pairs: only pairs sharing a mediator can have nonzero raw.
  std::vector<std::pair<int, int>> cand;
  for (int k = 0; k < nc; ++k) {
    const std::vector<int>& lst = nb[k];
    for (std::size_t a = 0; a < lst.size(); ++a)
      for (std::size_t b = a + 1; b < lst.size(); ++b)
        cand.emplace_back(lst[a], lst[b]);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  SactMatrix out;
  out.n = nc;
  out.rows.resize(nc);

  std::vector<double> raw(cand.size(), 0.0);
  for (std::size_t c = 0; c < cand.size(); ++c) {
    const auto [i, j] = cand[c];
    // Merge the two sparse rows; mediators accumulate in ascending k so the
    // sum is bit-identical to a naive ascending-k loop over all clusters.
    const auto& ri = jrow[i];
    const auto& rj = jrow[j];
    std::size_t a = 0, b = 0;
    double s = 0.0;
    while (a < ri.size() && b < rj.size()) {
      if (ri[a].first < rj[b].first) ++a;
      else if (rj[b].first < ri[a].first) ++b;
      else {
        const int k = ri[a].first;
        if (!(opt.exclude_endpoints && (k == i || k == j)))
          s += prof.influence[reg.source[k]] * std::min(ri[a].second, rj[b].second);
        ++a;
        ++b;
      }
    }
    raw[c] = s;
    out.raw_max = std::max(out.raw_max, s);
  }

  if (out.raw_max == 0.0) return out;  // identity similarity

  for (std::size_t c = 0; c < cand.size(); ++c) {
    if (raw[c] == 0.0) continue;
    const auto [i, j] = cand[c];
    const double v = raw[c] / out.raw_max;
    out.rows[i].emplace_back(j, v);
    out.rows[j].emplace_back(i, v);
  }
  for (auto& row : out.rows)
    std::sort(row.begin(), row.end());  // lexicographic: sorted by column
  return out;
}

}  // namespace concord
