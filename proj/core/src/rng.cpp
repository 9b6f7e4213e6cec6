#include "concord/rng.hpp"

#include <stdexcept>

namespace concord::rng {

std::uint64_t uniform_u64(engine& g, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_u64: bound must be >= 1");
  // Rejection from the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % bound;
}

int uniform_int(engine& g, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                 static_cast<std::int64_t>(lo)) + 1;
  return lo + static_cast<int>(uniform_u64(g, span));
}

std::vector<int> sample_without_replacement(int n, int m, engine& g) {
  if (m < 0 || m > n) throw std::invalid_argument("sample: need 0 <= m <= n");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  // Partial Fisher–Yates: position i swaps with a uniform j in [i, n).
  for (int i = 0; i < m; ++i) {
    int j = i + static_cast<int>(uniform_u64(g, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return pool;
}

}  // namespace concord::rng
