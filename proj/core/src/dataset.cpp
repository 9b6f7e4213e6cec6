#include "concord/dataset.hpp"

#include <cmath>
#include <string>

#include "concord/errors.hpp"
#include "concord/rng.hpp"

namespace concord {

Partition Dataset::truth() const {
  if (!has_labels()) throw InvalidSpec("dataset '" + name + "' has no labels");
  return partition_from_labels(labels);
}

void zscore(Dataset& ds) {
  for (int t = 0; t < ds.d; ++t) {
    double mean = 0.0;
    for (int i = 0; i < ds.n; ++i) mean += ds.features[static_cast<std::size_t>(i) * ds.d + t];
    mean /= ds.n;
    double var = 0.0;
    for (int i = 0; i < ds.n; ++i) {
      const double v = ds.features[static_cast<std::size_t>(i) * ds.d + t] - mean;
      var += v * v;
    }
    var /= ds.n;
    const double sd = std::sqrt(var);
    for (int i = 0; i < ds.n; ++i) {
      double& v = ds.features[static_cast<std::size_t>(i) * ds.d + t];
      v = sd > 0.0 ? (v - mean) / sd : 0.0;
    }
  }
}

Dataset prefix(const Dataset& ds, int m) {
  if (m < 1 || m > ds.n)
    throw InvalidSize("prefix: m=" + std::to_string(m) + " outside [1, n=" +
                      std::to_string(ds.n) + "]");
  Dataset out;
  out.name = ds.name + "-" + std::to_string(m);
  out.n = m;
  out.d = ds.d;
  out.features.assign(ds.features.begin(),
                      ds.features.begin() + static_cast<std::size_t>(m) * ds.d);
  if (ds.has_labels()) {
    out.labels.assign(ds.labels.begin(), ds.labels.begin() + m);
    out.n_classes = ds.n_classes;
  }
  return out;
}

Dataset gaussian_mixture(int n, int d, int k, double spread, std::uint64_t seed,
                         const std::string& name) {
  if (n < 1 || d < 1 || k < 1) throw InvalidSpec("gaussian_mixture: n, d, k must be >= 1");
  const int per_axis = static_cast<int>(std::ceil(std::pow(static_cast<double>(k),
                                                           1.0 / d)));
  Dataset ds;
  ds.name = name;
  ds.n = n;
  ds.d = d;
  ds.n_classes = k;
  ds.features.resize(static_cast<std::size_t>(n) * d);
  ds.labels.resize(n);

  std::vector<double> centers(static_cast<std::size_t>(k) * d);
  for (int c = 0; c < k; ++c) {
    int rem = c;
    for (int t = 0; t < d; ++t) {
      centers[static_cast<std::size_t>(c) * d + t] = (rem % per_axis) * 6.0 * spread;
      rem /= per_axis;
    }
  }

  rng::engine g = rng::make_engine(seed);
  for (int i = 0; i < n; ++i) {
    const int c = static_cast<int>(rng::uniform_u64(g, k));
    ds.labels[i] = c;
    for (int t = 0; t < d; ++t) {
      // Box–Muller; 1-u keeps the log argument in (0, 1].
      const double u1 = 1.0 - rng::uniform01(g);
      const double u2 = rng::uniform01(g);
      const double z = std::sqrt(-2.0 * std::log(u1)) *
                       std::cos(2.0 * 3.14159265358979323846 * u2);
      ds.features[static_cast<std::size_t>(i) * d + t] =
          centers[static_cast<std::size_t>(c) * d + t] + spread * z;
    }
  }
  return ds;
}

}  // namespace concord
