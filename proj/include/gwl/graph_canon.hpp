#pragma once

#include <string>
#include <vector>

#include "gwl/error.hpp"

namespace gwl {

enum class GraphMode { loops_only, complete_digraph };

/// Complete directed graph with self-loops (or a self-loop-only graph) on
/// n vertices, with integer colors on every edge.
struct EdgeColoredGraph {
  int n = 0;
  GraphMode mode = GraphMode::loops_only;
  std::vector<int> colors;  // loops_only: n entries; complete_digraph: n*n row-major

  static EdgeColoredGraph loops(std::vector<int> loop_colors);
  static EdgeColoredGraph digraph(int n, std::vector<int> matrix);

  int loop(int v) const { return colors[v]; }
  int color(int y, int z) const { return colors[static_cast<size_t>(y) * n + z]; }
};

/// Complete invariant for color isomorphism: equal bytes iff the graphs are
/// color-isomorphic (vertex bijection preserving exact edge colors).
///
/// Encoding (space-separated tokens):
///   loops_only:       "L <n> <sorted loop colors...>"
///   complete_digraph: "D <n> <#distinct> <legend...> <pattern...>"
/// where the pattern is the row-major canonical matrix with colors replaced
/// by their first-occurrence rank, and the legend lists the original color
/// of each rank. The canonical matrix is the lexicographic minimum over the
/// vertex orders produced by individualization-refinement.
struct CanonicalClass {
  std::string bytes;
  bool operator==(const CanonicalClass&) const = default;
  bool operator<(const CanonicalClass& other) const { return bytes < other.bytes; }
};

CanonicalClass canonical_class(const EdgeColoredGraph& g);

/// The graph relabeled into its canonical vertex order. Canonizing the
/// result reproduces the same class.
EdgeColoredGraph canonical_representative(const EdgeColoredGraph& g);

/// Exhaustive n!-bijection check; the independent oracle for canonical_class.
bool color_isomorphic(const EdgeColoredGraph& a, const EdgeColoredGraph& b);

/// Permutes vertices: vertex v of g becomes vertex perm[v].
EdgeColoredGraph permute_graph(const EdgeColoredGraph& g, const std::vector<int>& perm);

/// Multi-line dump for failure reproduction.
std::string debug_dump(const EdgeColoredGraph& g);

}  // namespace gwl
