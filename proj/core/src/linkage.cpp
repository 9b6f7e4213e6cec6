#include "concord/linkage.hpp"

#include <cassert>
#include <limits>
#include <numeric>
#include <string>

namespace concord {

namespace {

constexpr double kNoPair = -std::numeric_limits<double>::infinity();

// Row cache: best (max similarity, smallest column) over active columns j > i.
// Invariant after every merge: caches of live rows are exact, so one ascending
// scan with strict > reproduces the full lexicographic pair scan.
struct Cache {
  std::vector<double> val;
  std::vector<int> col;
};

}  // namespace

LinkageTree linkage_cluster(SymMatrix sim, Linkage kind) {
  const int n = sim.size();
  if (n < 1) throw InvalidK("linkage_cluster: empty matrix");
  LinkageTree tree;
  tree.n = n;
  tree.kind = kind;
  if (n == 1) return tree;
  tree.merges.reserve(n - 1);

  std::vector<double> size(n, 1.0);
  std::vector<int> active(n);  // kept sorted ascending
  std::iota(active.begin(), active.end(), 0);

  Cache cache;
  cache.val.assign(n, kNoPair);
  cache.col.assign(n, -1);

  auto recompute = [&](int i) {
    double best = kNoPair;
    int bj = -1;
    for (int j : active) {
      if (j <= i) continue;
      const double v = sim(i, j);
      if (v > best) {  // strict: first (smallest) j wins ties
        best = v;
        bj = j;
      }
    }
    cache.val[i] = best;
    cache.col[i] = bj;
  };

  for (int i = 0; i < n; ++i) recompute(i);

  [[maybe_unused]] double prev_h = std::numeric_limits<double>::infinity();
  for (int step = 0; step < n - 1; ++step) {
    // Global selection: strict > over ascending rows = lexicographic min pair.
    int a = -1;
    double best = kNoPair;
    for (int i : active) {
      if (cache.val[i] > best) {
        best = cache.val[i];
        a = i;
      }
    }
    const int b = cache.col[a];
    assert(a >= 0 && b > a);
    assert(best <= prev_h);  // greedy max-similarity heights never increase
    prev_h = best;
    tree.merges.push_back({a, b, best});

    const double na = size[a], nb = size[b];
    size[a] = na + nb;
    active.erase(std::lower_bound(active.begin(), active.end(), b));

    // Fold column/row b into a, then repair caches.
    for (int x : active) {
      if (x == a) continue;
      const double nv = merged_similarity(kind, sim(x, a), sim(x, b), na, nb);
      sim.at(x, a) = nv;
    }
    for (int x : active) {
      if (x >= a) break;  // rows x < a own the pair (x, a)
      if (cache.col[x] == a || cache.col[x] == b) {
        recompute(x);
      } else {
        const double nv = sim(x, a);
        if (nv > cache.val[x] || (nv == cache.val[x] && a < cache.col[x])) {
          cache.val[x] = nv;
          cache.col[x] = a;
        }
      }
    }
    recompute(a);
    // Rows between a and b can only have pointed at b (handled above);
    // rows beyond b never point backwards, so nothing else is stale.
    for (int x : active) {
      if (x <= a) continue;
      if (cache.col[x] == b) recompute(x);
    }
  }
  return tree;
}

Partition cut(const LinkageTree& t, int k) {
  if (k < 1 || k > t.n)
    throw InvalidK("cut: k=" + std::to_string(k) + " outside [1, " +
                   std::to_string(t.n) + "]");
  std::vector<int> parent(t.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int m = 0; m < t.n - k; ++m) {
    const Merge& mg = t.merges[m];
    // left < right and left is the surviving slot: roots stay the min slot id.
    parent[find(mg.right)] = find(mg.left);
  }
  std::vector<int> roots(t.n);
  for (int i = 0; i < t.n; ++i) roots[i] = find(i);
  return partition_from_labels(roots);
}

}  // namespace concord
