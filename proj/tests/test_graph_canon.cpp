#include <algorithm>
#include <map>

#include "doctest.h"
#include "gwl/graph_canon.hpp"
#include "gwl/sampling.hpp"

using namespace gwl;

TEST_CASE("loops-only classes are color multisets") {
  auto a = EdgeColoredGraph::loops({3, 1, 3});
  auto b = EdgeColoredGraph::loops({1, 3, 3});
  CHECK(canonical_class(a) == canonical_class(b));
  auto c = EdgeColoredGraph::loops({1, 1, 3});
  CHECK_FALSE(canonical_class(a) == canonical_class(c));
}

TEST_CASE("canonical class is invariant under vertex relabeling") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(6);
    auto g = random_digraph(n, 1 + rng.below(4), rng);
    auto sigma = rng.permutation(n);
    CHECK(canonical_class(g) == canonical_class(permute_graph(g, sigma)));
  }
}

TEST_CASE("equal color multisets with inequivalent matrices get distinct classes") {
  // Both matrices use colors {0,1}; in a the 1-edges form a directed
  // 4-cycle, in b they form two 2-cycles. The bijection oracle confirms
  // non-isomorphism.
  std::vector<int> cycle{
      0, 1, 0, 0,
      0, 0, 1, 0,
      0, 0, 0, 1,
      1, 0, 0, 0,
  };
  std::vector<int> pairs{
      0, 1, 0, 0,
      1, 0, 0, 0,
      0, 0, 0, 1,
      0, 0, 1, 0,
  };
  auto a = EdgeColoredGraph::digraph(4, cycle);
  auto b = EdgeColoredGraph::digraph(4, pairs);
  {
    auto ma = a.colors;
    auto mb = b.colors;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    REQUIRE(ma == mb);
  }
  REQUIRE_FALSE(color_isomorphic(a, b));
  CHECK_FALSE(canonical_class(a) == canonical_class(b));
}

TEST_CASE("color_isomorphic basics") {
  Rng rng(7);
  auto g = random_digraph(5, 3, rng);
  CHECK(color_isomorphic(g, g));

  auto h = g;
  h.colors[3] += 100;  // color multiset now differs
  CHECK_FALSE(color_isomorphic(g, h));

  auto tiny = random_digraph(4, 2, rng);
  CHECK_THROWS_AS(color_isomorphic(g, tiny), error);
}

TEST_CASE("classes agree with the bijection oracle on random pairs") {
  Rng rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + rng.below(5);  // up to 6 vertices here; the acceptance run goes to 7
    auto a = random_digraph(n, 1 + rng.below(3), rng);
    auto b = random_digraph(n, 1 + rng.below(3), rng);
    bool class_equal = canonical_class(a) == canonical_class(b);
    CHECK(class_equal == color_isomorphic(a, b));
    ++checked;
    // relabelled copies must always collapse to the same class
    auto sigma = rng.permutation(n);
    CHECK(canonical_class(a) == canonical_class(permute_graph(a, sigma)));
  }
  CHECK(checked == 150);
}

TEST_CASE("canonizing the canonical representative is a fixed point") {
  Rng rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng.below(6);
    auto g = random_digraph(n, 1 + rng.below(4), rng);
    auto rep = canonical_representative(g);
    CHECK(canonical_class(rep) == canonical_class(g));
    auto rep2 = canonical_representative(rep);
    CHECK(rep2.colors == rep.colors);
  }
  auto loops = EdgeColoredGraph::loops({5, 2, 2, 9});
  CHECK(canonical_representative(loops).colors == std::vector<int>{2, 2, 5, 9});
}

TEST_CASE("injective recoloring preserves class equality and inequality") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + rng.below(5);
    auto a = random_digraph(n, 1 + rng.below(3), rng);
    EdgeColoredGraph b;
    if (rng.below(2) == 0) {
      b = permute_graph(a, rng.permutation(n));  // isomorphic partner
    } else {
      b = random_digraph(n, 1 + rng.below(3), rng);
    }
    bool before = canonical_class(a) == canonical_class(b);

    // injective recoloring: c -> 3c + 11
    auto recolor = [](EdgeColoredGraph g2) {
      for (auto& c : g2.colors) c = 3 * c + 11;
      return g2;
    };
    bool after = canonical_class(recolor(a)) == canonical_class(recolor(b));
    CHECK(before == after);
  }
}

TEST_CASE("hard instances: monochromatic and near-monochromatic graphs") {
  // Monochromatic digraphs force the search through every branch; any two of
  // the same size are trivially isomorphic.
  auto a = EdgeColoredGraph::digraph(5, std::vector<int>(25, 4));
  auto b = EdgeColoredGraph::digraph(5, std::vector<int>(25, 4));
  CHECK(canonical_class(a) == canonical_class(b));

  auto c = a;
  c.colors[7] = 9;
  auto d = permute_graph(c, {4, 2, 0, 1, 3});
  CHECK(canonical_class(c) == canonical_class(d));
  CHECK_FALSE(canonical_class(a) == canonical_class(c));
}

TEST_CASE("debug dump shows the matrix") {
  auto g = EdgeColoredGraph::digraph(2, {1, 2, 3, 4});
  auto dump = debug_dump(g);
  CHECK(dump.find("complete_digraph n=2") != std::string::npos);
  CHECK(dump.find("1 2") != std::string::npos);
  CHECK(dump.find("3 4") != std::string::npos);
}
