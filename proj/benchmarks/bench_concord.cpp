#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "concord/agreement.hpp"
#include "concord/bipartite.hpp"
#include "concord/coassociation.hpp"
#include "concord/dataset.hpp"
#include "concord/gpmgla.hpp"
#include "concord/linkage.hpp"
#include "concord/pool.hpp"
#include "concord/rng.hpp"
#include "concord/sact.hpp"
#include "concord/tcut.hpp"
#include "concord/weac.hpp"

namespace {

using namespace concord;

// One pool-sampled ensemble of M members over n instances, reproducible.
Ensemble make_ensemble(int n, int m, std::uint64_t seed) {
  const Dataset ds = gaussian_mixture(n, 2, 5, 1.0, seed, "bench");
  PoolSpec spec;
  spec.kmeans_count = m;
  spec.rpcl_count = m;
  const Pool pool = build_pool(ds, spec, rng::derive_seed(seed, 0, "pool"));
  return sample_ensemble(pool, m, rng::derive_seed(seed, 0, "sample"));
}

Partition random_partition(int n, int k, std::uint64_t seed) {
  rng::engine g = rng::make_engine(seed);
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i)
    raw[i] = i < k ? i : rng::uniform_int(g, 0, k - 1);
  rng::shuffle(raw, g);
  return partition_from_labels(raw);
}

void BM_nmi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition p = random_partition(n, 10, 1);
  const Partition q = random_partition(n, 12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nmi(p, q));
}
BENCHMARK(BM_nmi)->Arg(1000)->Arg(10000);

void BM_agreement_profile(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ncai(e, 2.0));
}
BENCHMARK(BM_agreement_profile)->Arg(1000)->Arg(4000);

void BM_weighted_coassociation(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_coassociation(e, 2.0, 1 << 20));
}
BENCHMARK(BM_weighted_coassociation)->Arg(500)->Arg(1000)->Arg(2000);

void BM_linkage(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 5, 5);
  const auto co = weighted_coassociation(e, 2.0, 1 << 20);
  for (auto _ : state) {
    SymMatrix sim = co.values;  // linkage consumes its input
    benchmark::DoNotOptimize(linkage_cluster(std::move(sim), Linkage::average));
  }
}
BENCHMARK(BM_linkage)->Arg(500)->Arg(1000)->Arg(2000);

void BM_weac_consensus(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 5, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(weac(e, 2.0, Linkage::average, 5));
}
BENCHMARK(BM_weac_consensus)->Arg(500)->Arg(1000)->Arg(2000);

void BM_sact(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 10, 7);
  const ClusterRegistry reg = build_registry(e);
  const AgreementProfile prof = ncai(e, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(sact(reg, prof));
}
BENCHMARK(BM_sact)->Arg(1000)->Arg(4000);

void BM_tcut_basis(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 10, 8);
  const ConsensusGraph g = build_graph(e, 0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(TcutBasis(g));
}
BENCHMARK(BM_tcut_basis)->Arg(1000)->Arg(4000);

void BM_gpmgla_consensus(benchmark::State& state) {
  const Ensemble e = make_ensemble(static_cast<int>(state.range(0)), 5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(gpmgla(e, 5, 0.5, 2.0, 11));
}
BENCHMARK(BM_gpmgla_consensus)->Arg(1000)->Arg(4000)->Arg(8000);

}  // namespace

BENCHMARK_MAIN();
