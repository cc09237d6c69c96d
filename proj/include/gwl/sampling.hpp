#pragma once

#include <cstdint>
#include <vector>

#include "gwl/graph_canon.hpp"
#include "gwl/group.hpp"

namespace gwl {

/// splitmix64 stream; used instead of <random> distributions so sampled
/// values are identical across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  /// Uniform value in [0, bound), bound >= 1.
  int below(int bound);
  std::vector<int> permutation(int n);

 private:
  uint64_t state_;
};

/// The same group with elements renamed by a random permutation.
Group relabeled(const Group& g, Rng& rng);

std::vector<int> random_tuple(int n, int k, Rng& rng);

EdgeColoredGraph random_digraph(int n, int num_colors, Rng& rng);

}  // namespace gwl
