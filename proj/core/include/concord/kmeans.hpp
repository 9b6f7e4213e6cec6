#pragma once

#include <cstdint>
#include <vector>

#include "concord/partition.hpp"

namespace concord {

struct KMeansConfig {
  int max_iter = 100;
  double tol = 1e-6;  // relative inertia improvement per iteration
  int restarts = 1;   // best inertia wins; ties go to the earliest restart
  std::uint64_t seed = 0;
};

struct KMeansResult {
  Partition partition;            // exactly k non-empty clusters
  std::vector<double> centroids;  // k × d row-major
  double inertia = 0.0;
  int iterations = 0;             // of the winning restart
};

// Lloyd's algorithm, k-means++ seeding, empty clusters repaired each
// iteration by stealing the point farthest from its centroid. Deterministic
// for a given (data, k, config): all randomness flows from config.seed
// through the library engine, and every tie (nearest centroid, farthest
// point, best restart) resolves to the smallest index.
KMeansResult kmeans(const std::vector<double>& data, int n, int d, int k,
                    const KMeansConfig& cfg);

}  // namespace concord
