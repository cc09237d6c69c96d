#include "gwl/sampling.hpp"

namespace gwl {

uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int bound) {
  // Modulo bias is irrelevant at these bounds (< 2^16 vs 2^64).
  return static_cast<int>(next() % static_cast<uint64_t>(bound));
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = below(i + 1);
    std::swap(p[i], p[j]);
  }
  return p;
}

Group relabeled(const Group& g, Rng& rng) {
  const int n = g.order();
  std::vector<int> sigma = rng.permutation(n);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(sigma[a]) * n + sigma[b]] = sigma[g.mul(a, b)];
    }
  }
  return Group::from_flat_table(n, std::move(table));
}

std::vector<int> random_tuple(int n, int k, Rng& rng) {
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = rng.below(n);
  return t;
}

EdgeColoredGraph random_digraph(int n, int num_colors, Rng& rng) {
  std::vector<int> matrix(static_cast<size_t>(n) * n);
  for (auto& c : matrix) c = rng.below(num_colors);
  return EdgeColoredGraph::digraph(n, std::move(matrix));
}

}  // namespace gwl
