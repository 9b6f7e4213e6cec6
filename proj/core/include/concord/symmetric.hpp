#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace concord {

// Dense symmetric matrix, upper triangle (diagonal included) packed row-major:
// index(i,j) = i*(2n-i-1)/2 + j for i <= j. Half the memory of a full square,
// which is what makes n ~ 10^4 co-association matrices workable.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n, double fill = 0.0)
      : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, fill) {}

  int size() const { return n_; }

  double operator()(int i, int j) const {
    if (i > j) std::swap(i, j);
    return a_[idx(i, j)];
  }

  double& at(int i, int j) {
    if (i > j) std::swap(i, j);
    return a_[idx(i, j)];
  }

  const std::vector<double>& packed() const { return a_; }
  std::vector<double>& packed() { return a_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * (2 * static_cast<std::size_t>(n_) - i - 1) / 2 +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace concord
