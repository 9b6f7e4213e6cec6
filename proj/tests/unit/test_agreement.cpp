#include <cmath>
#include <vector>

#include "concord/agreement.hpp"
#include "concord/partition.hpp"
#include "concord/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace concord;

TEST_SUITE_BEGIN("agreement");

TEST_CASE("nmi on hand-checked pairs") {
  SUBCASE("identical partitions score exactly 1") {
    const Partition p = partition_from_labels({0, 0, 1, 1, 2});
    CHECK(nmi(p, p) == 1.0);
  }
  SUBCASE("relabeling does not matter") {
    const Partition p = partition_from_labels({0, 1, 1, 2, 2});
    const Partition q = partition_from_labels({2, 0, 0, 1, 1});
    CHECK(nmi(p, q) == 1.0);
  }
  SUBCASE("independent partitions score 0") {
    const Partition p = partition_from_labels({0, 1, 0, 1});
    const Partition q = partition_from_labels({0, 0, 1, 1});
    CHECK(nmi(p, q) == 0.0);
  }
  SUBCASE("partial overlap: 3+1 split against 2+2") {
    const Partition p = partition_from_labels({0, 0, 0, 1});
    const Partition q = partition_from_labels({0, 0, 1, 1});
    // Contingency 2/1/0/1; geometric normalization by the two entropies.
    const double num =
        2 * std::log(4.0 * 2 / (3 * 2)) + std::log(4.0 / (3 * 2)) + std::log(2.0);
    const double den = std::sqrt((3 * std::log(3.0 / 4) + std::log(0.25)) *
                                 (4 * std::log(0.5)));
    const double v = nmi(p, q);
    CHECK(v == doctest::Approx(num / den).epsilon(1e-14));
    CHECK(v == doctest::Approx(0.3456).epsilon(2e-4));
  }
  SUBCASE("a single-cluster side carries no information") {
    const Partition one = partition_from_labels({0, 0, 0, 0});
    const Partition multi = partition_from_labels({0, 1, 2, 3});
    CHECK(nmi(one, multi) == 0.0);
    CHECK(nmi(multi, one) == 0.0);
    CHECK(nmi(one, one) == 0.0);
  }
  SUBCASE("all-singletons against itself is a bijection, hence 1") {
    const Partition s = partition_from_labels({0, 1, 2, 3});
    CHECK(nmi(s, s) == 1.0);
  }
  SUBCASE("different instance counts refused") {
    const Partition p = partition_from_labels({0, 1});
    const Partition q = partition_from_labels({0, 1, 1});
    CHECK_THROWS_AS(nmi(p, q), DimensionMismatch);
  }
}

TEST_CASE("nmi matches the probability-form reference on random pairs") {
  rng::engine g = rng::make_engine(77);
  for (int t = 0; t < 200; ++t) {
    const int n = rng::uniform_int(g, 2, 30);
    const Partition p = oracles::random_partition(g, n, 6);
    const Partition q = oracles::random_partition(g, n, 6);
    const double v = nmi(p, q);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK(v == doctest::Approx(oracles::naive_nmi(p, q)).epsilon(1e-12));
    CHECK(v == doctest::Approx(nmi(q, p)).epsilon(1e-12));
  }
}

TEST_CASE("crowd agreement: mean pairwise nmi") {
  Ensemble e;
  e.members.push_back(partition_from_labels({0, 0, 1, 1}));
  e.members.push_back(partition_from_labels({0, 0, 1, 1}));
  e.members.push_back(partition_from_labels({0, 1, 0, 1}));

  CHECK(cai(e, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cai(e, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cai(e, 2) == 0.0);
  CHECK_THROWS_AS(cai(e, 3), InvalidIndex);
  CHECK_THROWS_AS(cai(e, -1), InvalidIndex);

  Ensemble one;
  one.members.push_back(e.members[0]);
  CHECK_THROWS_AS(cai(one, 0), InvalidSize);

  SUBCASE("profile normalizes by the maximum and powers by beta") {
    const AgreementProfile p1 = ncai(e, 1.0);
    CHECK(p1.cai == std::vector<double>{0.5, 0.5, 0.0});
    CHECK(p1.ncai == std::vector<double>{1.0, 1.0, 0.0});
    CHECK(p1.influence == std::vector<double>{1.0, 1.0, 0.0});
    CHECK_FALSE(p1.all_zero_fallback);

    const AgreementProfile p0 = ncai(e, 0.0);
    CHECK(p0.influence == std::vector<double>{1.0, 1.0, 1.0});

    const AgreementProfile p2 = ncai(e, 2.0);
    CHECK(p2.influence == std::vector<double>{1.0, 1.0, 0.0});

    CHECK_THROWS_AS(ncai(e, -0.5), InvalidSpec);
  }
}

TEST_CASE("profile invariants on random ensembles") {
  rng::engine g = rng::make_engine(123);
  for (int t = 0; t < 30; ++t) {
    const int n = rng::uniform_int(g, 6, 24);
    const int m = rng::uniform_int(g, 2, 6);
    const Ensemble e = oracles::random_ensemble(g, n, m, 4);
    const AgreementProfile prof = ncai(e, 2.0);
    if (prof.all_zero_fallback) continue;

    double mx = 0.0;
    for (double v : prof.ncai) mx = std::max(mx, v);
    CHECK(mx == 1.0);  // the argmax normalizes to exactly one
    for (int i = 0; i < m; ++i) {
      CHECK(prof.cai[i] == doctest::Approx(cai(e, i)).epsilon(1e-12));
      for (int j = 0; j < m; ++j) {
        if (prof.cai[i] > prof.cai[j]) {
          CHECK(prof.influence[i] > prof.influence[j]);  // strict for beta > 0
        }
      }
    }
  }
}

TEST_CASE("all pairwise agreements zero falls back to uniform weights") {
  Ensemble e;
  e.members.push_back(partition_from_labels({0, 1, 0, 1}));
  e.members.push_back(partition_from_labels({0, 0, 1, 1}));
  const AgreementProfile prof = ncai(e, 2.0);
  CHECK(prof.all_zero_fallback);
  CHECK(prof.ncai == std::vector<double>{1.0, 1.0});
  CHECK(prof.influence == std::vector<double>{1.0, 1.0});
}

TEST_SUITE_END();
