#include "concord/pool.hpp"

#include <cmath>
#include <string>

#include "concord/kmeans.hpp"
#include "concord/rng.hpp"
#include "concord/rpcl.hpp"

namespace concord {

int ceil_count(double x) {
  return static_cast<int>(std::ceil(x - 1e-9));
}

Partition kmeans_partition(const Dataset& ds, int k, std::uint64_t seed) {
  KMeansConfig cfg;
  cfg.seed = seed;
  return kmeans(ds.features, ds.n, ds.d, k, cfg).partition;
}

Partition ill_clustering(const Dataset& ds, std::uint64_t seed) {
  if (ds.n < 4) throw InvalidSize("ill_clustering: need n >= 4");
  rng::engine g = rng::make_engine(seed);
  const double root = std::sqrt(static_cast<double>(ds.n));
  const int lo = ceil_count(root);
  const int hi = static_cast<int>(std::floor(2.0 * root));
  const int k = rng::uniform_int(g, lo, hi);
  Partition base = kmeans_partition(ds, k, rng::derive_seed(seed, 0, "ill-kmeans"));
  const double rho = rng::uniform_real(g, 0.7, 0.99);
  const int merged = std::min(ceil_count(rho * k), k - 1);
  const std::vector<int> chosen = rng::sample_without_replacement(k, merged, g);
  std::vector<char> into_one(k, 0);
  for (int c : chosen) into_one[c] = 1;
  std::vector<int> raw(ds.n);
  for (int i = 0; i < ds.n; ++i) {
    const int c = base.labels[i];
    raw[i] = into_one[c] ? k : c;  // merged clusters share the fresh label k
  }
  return partition_from_labels(raw);
}

Pool build_pool(const Dataset& ds, const PoolSpec& spec, std::uint64_t seed) {
  if (spec.kmeans_count < 0 || spec.rpcl_count < 0 ||
      spec.kmeans_count + spec.rpcl_count < 1)
    throw InvalidSpec("build_pool: need at least one generator entry");
  if (spec.ill_ratio < 0.0 || spec.ill_ratio > 1.0)
    throw InvalidSpec("build_pool: ill_ratio must lie in [0, 1]");
  if (ds.n < 4) throw InvalidSize("build_pool: need n >= 4");

  const int size = spec.kmeans_count + spec.rpcl_count;
  const int k_hi = static_cast<int>(std::floor(2.0 * std::sqrt(static_cast<double>(ds.n))));

  Pool pool;
  pool.n = ds.n;
  pool.entries.resize(size);
  for (int i = 0; i < size; ++i) {
    rng::engine g = rng::make_engine(rng::derive_seed(seed, i, "pool-k"));
    const int k = rng::uniform_int(g, 2, k_hi);
    PoolEntry& e = pool.entries[i];
    e.k = k;
    e.seed = rng::derive_seed(seed, i, "pool-gen");
    if (i < spec.kmeans_count) {
      e.generator = "kmeans";
      e.partition = kmeans_partition(ds, k, e.seed);
    } else {
      e.generator = "rpcl";
      RpclConfig rc;
      rc.learn_rate = spec.rpcl_learn_rate;
      rc.delearn_rate = spec.rpcl_delearn_rate;
      rc.seed = e.seed;
      e.partition = rpcl(ds.features, ds.n, ds.d, k, rc);
    }
  }

  const int ill_count = std::min(ceil_count(spec.ill_ratio * size), size);
  if (ill_count > 0) {
    rng::engine g = rng::make_engine(rng::derive_seed(seed, 0, "ill-select"));
    const std::vector<int> places = rng::sample_without_replacement(size, ill_count, g);
    for (int pos : places) {
      PoolEntry& e = pool.entries[pos];
      e.generator = "ill";
      e.ill = true;
      e.seed = rng::derive_seed(seed, pos, "ill-entry");
      e.partition = ill_clustering(ds, e.seed);
      e.k = e.partition.n_clusters;
    }
  }
  return pool;
}

Ensemble sample_ensemble(const Pool& pool, int m, std::uint64_t seed,
                         std::vector<int>* picked) {
  if (m > pool.size())
    throw InvalidSize("sample_ensemble: m=" + std::to_string(m) +
                      " exceeds pool size " + std::to_string(pool.size()));
  rng::engine g = rng::make_engine(seed);
  const std::vector<int> idx = rng::sample_without_replacement(pool.size(), m, g);
  Ensemble e;
  e.members.reserve(m);
  for (int i : idx) e.members.push_back(pool.entries[i].partition);
  if (picked) *picked = idx;
  return e;
}

}  // namespace concord
