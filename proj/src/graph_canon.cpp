#include "gwl/graph_canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

namespace gwl {

EdgeColoredGraph EdgeColoredGraph::loops(std::vector<int> loop_colors) {
  EdgeColoredGraph g;
  g.n = static_cast<int>(loop_colors.size());
  g.mode = GraphMode::loops_only;
  g.colors = std::move(loop_colors);
  return g;
}

EdgeColoredGraph EdgeColoredGraph::digraph(int n, std::vector<int> matrix) {
  if (matrix.size() != static_cast<size_t>(n) * n) {
    raise(errc::parameter_out_of_range, "color matrix size mismatch");
  }
  EdgeColoredGraph g;
  g.n = n;
  g.mode = GraphMode::complete_digraph;
  g.colors = std::move(matrix);
  return g;
}

namespace {

// Ordered partition refinement + individualization. Cells stay ordered by
// invariant data only, so the set of leaf matrices is the same for
// color-isomorphic graphs and the lexicographic minimum is canonical.
struct CanonSearch {
  const EdgeColoredGraph& g;
  int n;
  std::optional<std::vector<int>> best;       // minimal permuted matrix
  std::vector<int> best_perm;                 // vertex -> canonical position

  explicit CanonSearch(const EdgeColoredGraph& graph) : g(graph), n(graph.n) {}

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    using Sig = std::vector<std::tuple<int, int, int>>;
    for (;;) {
      std::vector<int> cell_of(n);
      for (size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      Cells next;
      bool changed = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<Sig, std::vector<int>> split;
        for (int v : cell) {
          Sig sig;
          sig.reserve(n);
          for (int w = 0; w < n; ++w) {
            sig.emplace_back(g.color(v, w), g.color(w, v), cell_of[w]);
          }
          std::sort(sig.begin(), sig.end());
          split[std::move(sig)].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, members] : split) next.push_back(std::move(members));
      }
      cells = std::move(next);
      if (!changed) return;
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> pos(n);
    for (size_t p = 0; p < cells.size(); ++p) pos[cells[p][0]] = static_cast<int>(p);
    std::vector<int> mat(static_cast<size_t>(n) * n);
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        mat[static_cast<size_t>(pos[v]) * n + pos[w]] = g.color(v, w);
      }
    }
    if (!best || mat < *best) {
      best = std::move(mat);
      best_perm = std::move(pos);
    }
  }

  void search(Cells cells) {
    refine(cells);
    int target = -1;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      if (target < 0 || cells[c].size() < cells[target].size()) target = static_cast<int>(c);
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (static_cast<int>(c) != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  std::vector<int> run() {
    // Initial partition: group by self-loop color, cells ordered by color.
    std::map<int, std::vector<int>> by_loop;
    for (int v = 0; v < n; ++v) by_loop[g.color(v, v)].push_back(v);
    Cells cells;
    for (auto& [color, members] : by_loop) cells.push_back(std::move(members));
    search(std::move(cells));
    return *best;
  }
};

std::string encode_digraph(int n, const std::vector<int>& canonical_matrix) {
  std::vector<int> legend;
  std::map<int, int> rank_of;
  std::ostringstream pattern;
  for (int c : canonical_matrix) {
    auto it = rank_of.find(c);
    if (it == rank_of.end()) {
      it = rank_of.emplace(c, static_cast<int>(legend.size())).first;
      legend.push_back(c);
    }
    pattern << ' ' << it->second;
  }
  std::ostringstream out;
  out << "D " << n << ' ' << legend.size();
  for (int c : legend) out << ' ' << c;
  out << pattern.str();
  return out.str();
}

}  // namespace

CanonicalClass canonical_class(const EdgeColoredGraph& g) {
  if (g.mode == GraphMode::loops_only) {
    std::vector<int> sorted = g.colors;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "L " << g.n;
    for (int c : sorted) out << ' ' << c;
    return CanonicalClass{out.str()};
  }
  if (g.n == 0) return CanonicalClass{"D 0 0"};
  CanonSearch search(g);
  return CanonicalClass{encode_digraph(g.n, search.run())};
}

EdgeColoredGraph canonical_representative(const EdgeColoredGraph& g) {
  if (g.mode == GraphMode::loops_only) {
    std::vector<int> sorted = g.colors;
    std::sort(sorted.begin(), sorted.end());
    return EdgeColoredGraph::loops(std::move(sorted));
  }
  if (g.n == 0) return g;
  CanonSearch search(g);
  std::vector<int> mat = search.run();
  return EdgeColoredGraph::digraph(g.n, std::move(mat));
}

EdgeColoredGraph permute_graph(const EdgeColoredGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n) {
    raise(errc::parameter_out_of_range, "permutation size mismatch");
  }
  EdgeColoredGraph out;
  out.n = g.n;
  out.mode = g.mode;
  out.colors.resize(g.colors.size());
  if (g.mode == GraphMode::loops_only) {
    for (int v = 0; v < g.n; ++v) out.colors[perm[v]] = g.loop(v);
  } else {
    for (int v = 0; v < g.n; ++v) {
      for (int w = 0; w < g.n; ++w) {
        out.colors[static_cast<size_t>(perm[v]) * g.n + perm[w]] = g.color(v, w);
      }
    }
  }
  return out;
}

bool color_isomorphic(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
  if (a.n != b.n || a.mode != b.mode) {
    raise(errc::size_mismatch, "graphs differ in vertex count or mode");
  }
  const int n = a.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    if (a.mode == GraphMode::loops_only) {
      for (int v = 0; v < n && ok; ++v) ok = a.loop(v) == b.loop(perm[v]);
    } else {
      for (int v = 0; v < n && ok; ++v) {
        for (int w = 0; w < n; ++w) {
          if (a.color(v, w) != b.color(perm[v], perm[w])) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string debug_dump(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << (g.mode == GraphMode::loops_only ? "loops_only" : "complete_digraph") << " n=" << g.n
      << "\n";
  if (g.mode == GraphMode::loops_only) {
    for (int v = 0; v < g.n; ++v) {
      if (v) out << ' ';
      out << g.loop(v);
    }
    out << "\n";
  } else {
    for (int v = 0; v < g.n; ++v) {
      for (int w = 0; w < g.n; ++w) {
        if (w) out << ' ';
        out << g.color(v, w);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace gwl
