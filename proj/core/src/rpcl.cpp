#include "concord/rpcl.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "concord/errors.hpp"
#include "concord/rng.hpp"

namespace concord {

Partition rpcl(const std::vector<double>& data, int n, int d, int k_max,
               const RpclConfig& cfg) {
  if (n < 1 || d < 1 || data.size() != static_cast<std::size_t>(n) * d)
    throw DimensionMismatch("rpcl: data is not n×d");
  if (k_max < 1 || k_max > n)
    throw InvalidK("rpcl: k_max=" + std::to_string(k_max) + " outside [1, n]");

  rng::engine g = rng::make_engine(cfg.seed);
  std::vector<int> start = rng::sample_without_replacement(n, k_max, g);
  std::vector<double> unit(static_cast<std::size_t>(k_max) * d);
  for (int c = 0; c < k_max; ++c)
    for (int t = 0; t < d; ++t)
      unit[static_cast<std::size_t>(c) * d + t] =
          data[static_cast<std::size_t>(start[c]) * d + t];

  // Win counts start at 1 so the conscience ratio is defined from the start.
  std::vector<long long> wins(k_max, 1);
  const int epoch_len = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    double moved = 0.0;
    for (int s = 0; s < epoch_len; ++s) {
      const int idx = static_cast<int>(rng::uniform_u64(g, n));
      const double* x = &data[static_cast<std::size_t>(idx) * d];
      long long total = 0;
      for (long long w : wins) total += w;
      // Frequency-sensitive selection: scale distance by relative win count.
      int winner = -1, rival = -1;
      double bw = std::numeric_limits<double>::infinity();
      double br = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k_max; ++c) {
        const double* m = &unit[static_cast<std::size_t>(c) * d];
        double d2 = 0.0;
        for (int t = 0; t < d; ++t) {
          const double diff = x[t] - m[t];
          d2 += diff * diff;
        }
        const double score =
            d2 * static_cast<double>(wins[c]) / static_cast<double>(total);
        if (score < bw) {
          br = bw;
          rival = winner;
          bw = score;
          winner = c;
        } else if (score < br) {
          br = score;
          rival = c;
        }
      }
      double* mw = &unit[static_cast<std::size_t>(winner) * d];
      for (int t = 0; t < d; ++t) {
        const double step = cfg.learn_rate * (x[t] - mw[t]);
        mw[t] += step;
        moved = std::max(moved, std::fabs(step));
      }
      ++wins[winner];
      if (rival >= 0 && cfg.delearn_rate > 0.0) {
        double* mr = &unit[static_cast<std::size_t>(rival) * d];
        for (int t = 0; t < d; ++t) {
          const double step = cfg.delearn_rate * (x[t] - mr[t]);
          mr[t] -= step;
          moved = std::max(moved, std::fabs(step));
        }
      }
    }
    if (moved < cfg.stop_tol) break;
  }

  // Prune units that won too rarely; keep at least the most active one.
  const double threshold = static_cast<double>(n) / (4.0 * k_max);
  std::vector<int> alive;
  int top = 0;
  for (int c = 0; c < k_max; ++c) {
    if (static_cast<double>(wins[c] - 1) >= threshold) alive.push_back(c);
    if (wins[c] > wins[top]) top = c;
  }
  if (alive.empty()) alive.push_back(top);

  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) {
    const double* x = &data[static_cast<std::size_t>(i) * d];
    double best = std::numeric_limits<double>::infinity();
    int bc = alive[0];
    for (int c : alive) {
      const double* m = &unit[static_cast<std::size_t>(c) * d];
      double d2 = 0.0;
      for (int t = 0; t < d; ++t) {
        const double diff = x[t] - m[t];
        d2 += diff * diff;
      }
      if (d2 < best) {
        best = d2;
        bc = c;
      }
    }
    raw[i] = bc;
  }
  return partition_from_labels(raw);  // drops units that attracted no points
}

}  // namespace concord
