#pragma once

#include <cstdint>
#include <vector>

#include "concord/partition.hpp"

namespace concord {

struct RpclConfig {
  double learn_rate = 0.05;     // winner toward the sample
  double delearn_rate = 0.002;  // rival pushed away; 0 disables penalization
  int max_epochs = 50;          // an epoch draws ceil(sqrt(n)) samples
  double stop_tol = 1e-9;       // quit early when an epoch moves no unit further
  std::uint64_t seed = 0;
};

// Rival penalized competitive learning: k_max units start on random distinct
// data points; for each drawn sample the frequency-sensitive winner moves
// toward it and the runner-up is repelled, so surplus units drift off the
// data. Units winning fewer than n/(4·k_max) samples are pruned; instances
// are then assigned to the nearest surviving unit. Output has between 1 and
// k_max clusters, deterministic given the seed.
Partition rpcl(const std::vector<double>& data, int n, int d, int k_max,
               const RpclConfig& cfg);

}  // namespace concord
