#include "concord/kmeans.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "concord/errors.hpp"
#include "concord/rng.hpp"

namespace concord {

namespace {

double sq_dist(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int t = 0; t < d; ++t) {
    const double diff = a[t] - b[t];
    s += diff * diff;
  }
  return s;
}

// k-means++: first centroid uniform, then proportional to squared distance
// from the chosen set. All-zero mass (duplicate points) falls back to a
// uniform draw.
void init_plus_plus(const std::vector<double>& data, int n, int d, int k,
                    rng::engine& g, std::vector<double>& cent) {
  std::vector<double> dist2(n, 0.0);
  int first = static_cast<int>(rng::uniform_u64(g, n));
  for (int t = 0; t < d; ++t) cent[t] = data[static_cast<std::size_t>(first) * d + t];
  for (int i = 0; i < n; ++i)
    dist2[i] = sq_dist(&data[static_cast<std::size_t>(i) * d], cent.data(), d);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += dist2[i];
    int pick;
    if (total > 0.0) {
      const double r = rng::uniform01(g) * total;
      double acc = 0.0;
      pick = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc > r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng::uniform_u64(g, n));
    }
    double* cc = &cent[static_cast<std::size_t>(c) * d];
    for (int t = 0; t < d; ++t) cc[t] = data[static_cast<std::size_t>(pick) * d + t];
    for (int i = 0; i < n; ++i)
      dist2[i] = std::min(dist2[i],
                          sq_dist(&data[static_cast<std::size_t>(i) * d], cc, d));
  }
}

struct RunResult {
  std::vector<int> labels;
  std::vector<double> centroids;
  double inertia = 0.0;
  int iterations = 0;
};

RunResult lloyd_once(const std::vector<double>& data, int n, int d, int k,
                     const KMeansConfig& cfg, rng::engine& g) {
  RunResult r;
  r.centroids.assign(static_cast<std::size_t>(k) * d, 0.0);
  init_plus_plus(data, n, d, k, g, r.centroids);
  r.labels.assign(n, -1);

  std::vector<int> counts(k);
  std::vector<double> dist2(n);
  std::vector<int> prev(n, -2);
  double prev_inertia = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= cfg.max_iter; ++it) {
    r.iterations = it;
    // Assignment; strict < keeps the smallest centroid index on ties.
    for (int i = 0; i < n; ++i) {
      const double* x = &data[static_cast<std::size_t>(i) * d];
      double best = std::numeric_limits<double>::infinity();
      int bc = 0;
      for (int c = 0; c < k; ++c) {
        const double v = sq_dist(x, &r.centroids[static_cast<std::size_t>(c) * d], d);
        if (v < best) {
          best = v;
          bc = c;
        }
      }
      r.labels[i] = bc;
      dist2[i] = best;
    }
    // Empty-cluster repair: each empty cluster steals the point currently
    // farthest from its centroid (ties to the smallest index).
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < n; ++i) ++counts[r.labels[i]];
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int far = -1;
      double fd = -1.0;
      for (int i = 0; i < n; ++i)
        if (counts[r.labels[i]] > 1 && dist2[i] > fd) {
          fd = dist2[i];
          far = i;
        }
      if (far < 0) break;  // fewer distinct points than clusters
      --counts[r.labels[far]];
      r.labels[far] = c;
      counts[c] = 1;
      dist2[far] = 0.0;
    }
    // Centroid update + objective.
    std::fill(r.centroids.begin(), r.centroids.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double* x = &data[static_cast<std::size_t>(i) * d];
      double* cc = &r.centroids[static_cast<std::size_t>(r.labels[i]) * d];
      for (int t = 0; t < d; ++t) cc[t] += x[t];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      double* cc = &r.centroids[static_cast<std::size_t>(c) * d];
      for (int t = 0; t < d; ++t) cc[t] /= counts[c];
    }
    r.inertia = 0.0;
    for (int i = 0; i < n; ++i)
      r.inertia += sq_dist(&data[static_cast<std::size_t>(i) * d],
                           &r.centroids[static_cast<std::size_t>(r.labels[i]) * d], d);

    if (prev == r.labels) break;
    prev = r.labels;
    if (prev_inertia - r.inertia <= cfg.tol * prev_inertia) break;
    prev_inertia = r.inertia;
  }
  return r;
}

}  // namespace

KMeansResult kmeans(const std::vector<double>& data, int n, int d, int k,
                    const KMeansConfig& cfg) {
  if (n < 1 || d < 1 || data.size() != static_cast<std::size_t>(n) * d)
    throw DimensionMismatch("kmeans: data is not n×d");
  if (k < 1 || k > n)
    throw InvalidK("kmeans: k=" + std::to_string(k) + " outside [1, n=" +
                   std::to_string(n) + "]");
  rng::engine g = rng::make_engine(cfg.seed);
  RunResult best;
  bool have = false;
  for (int rep = 0; rep < std::max(1, cfg.restarts); ++rep) {
    RunResult r = lloyd_once(data, n, d, k, cfg, g);
    if (!have || r.inertia < best.inertia) {  // strict: earliest restart wins ties
      best = std::move(r);
      have = true;
    }
  }
  KMeansResult out;
  out.partition.labels = std::move(best.labels);
  out.partition.n_clusters = k;
  out.centroids = std::move(best.centroids);
  out.inertia = best.inertia;
  out.iterations = best.iterations;
  return out;
}

}  // namespace concord
