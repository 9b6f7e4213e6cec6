#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concord/dataset.hpp"
#include "concord/ensemble.hpp"

namespace concord {

struct PoolSpec {
  int kmeans_count = 100;
  int rpcl_count = 100;
  double ill_ratio = 0.0;  // fraction of the pool replaced by ill clusterings
  double rpcl_learn_rate = 0.05;
  double rpcl_delearn_rate = 0.002;
};

struct PoolEntry {
  Partition partition;
  std::string generator;  // "kmeans" | "rpcl" | "ill"
  int k = 0;              // requested k (k_max for rpcl)
  std::uint64_t seed = 0;
  bool ill = false;
};

struct Pool {
  int n = 0;
  std::vector<PoolEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// k-means partition of the dataset's feature rows; Lloyd single restart.
Partition kmeans_partition(const Dataset& ds, int k, std::uint64_t seed);

// Deliberately imbalanced partition: k-means with k ~ U[⌈√n⌉, ⌊2√n⌋], then a
// uniformly chosen ⌈ρ·k⌉ of its clusters (ρ ~ U(0.7, 0.99), capped at k-1 so
// at least 2 clusters survive) merged into one.
Partition ill_clustering(const Dataset& ds, std::uint64_t seed);

// Generator pool: kmeans_count + rpcl_count entries with k ~ U[2, ⌊2√n⌋],
// then ⌈ill_ratio·size⌉ uniformly chosen entries replaced by ill clusterings.
// Replaced subsets are nested across ratios for the same seed. Every entry is
// reproducible from (dataset, spec, seed) alone.
Pool build_pool(const Dataset& ds, const PoolSpec& spec, std::uint64_t seed);

// Uniform draw of m distinct pool members, order randomized. picked (optional)
// receives the pool indices in draw order.
Ensemble sample_ensemble(const Pool& pool, int m, std::uint64_t seed,
                         std::vector<int>* picked = nullptr);

// ⌈x⌉ with a 1e-9 nudge so ratios like 0.2·200 stay at 40 despite fp dust.
int ceil_count(double x);

}  // namespace concord
