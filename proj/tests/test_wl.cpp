#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gwl/catalog.hpp"
#include "gwl/sampling.hpp"
#include "gwl/wl.hpp"

using namespace gwl;

namespace {

Group named(const char* name) { return catalog_group(name); }

// partition induced by `fine` refines the one induced by `coarse`
bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  REQUIRE(fine.size() == coarse.size());
  std::map<int, int> image;
  for (size_t i = 0; i < fine.size(); ++i) {
    auto [it, fresh] = image.emplace(fine[i], coarse[i]);
    if (!fresh && it->second != coarse[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("initial coloring of Z2 against itself, k=1") {
  Group a = named("cyclic(2)");
  Group b = named("cyclic(2)");
  auto c = initial_coloring(a, b, 1, 2, WlVersion::I);
  CHECK(c.classes == 2);  // {identity tuples}, {non-identity tuples}
  CHECK(c.left[a.identity()] == c.right[b.identity()]);
  CHECK(multisets_equal(c));
}

TEST_CASE("round-0 marked types separate cyclic(4) from klein4 at k=1") {
  Group z4 = named("cyclic(4)");
  Group v4 = named("klein4");
  auto c = initial_coloring(z4, v4, 1, 2, WlVersion::II);
  // order-4 elements of Z4 share no color with any V4 element
  for (int x = 0; x < 4; ++x) {
    if (z4.element_order(x) != 4) continue;
    for (int y = 0; y < 4; ++y) CHECK(c.left[x] != c.right[y]);
  }
  CHECK_FALSE(multisets_equal(c));
}

TEST_CASE("round-0 partial-isomorphism types do not separate them at k=1") {
  Group z4 = named("cyclic(4)");
  Group v4 = named("klein4");
  auto c = initial_coloring(z4, v4, 1, 2, WlVersion::I);
  CHECK(c.classes == 2);
  CHECK(multisets_equal(c));  // 1 + 3 on both sides
}

TEST_CASE("refining a stable coloring returns the identical partition") {
  Group a = named("dihedral(3)");
  Group b = named("cyclic(6)");
  auto [stable, trace] = stable_coloring(a, b, 2, 2, WlVersion::I);
  auto again = refine_step(a, b, stable);
  CHECK(again.classes == stable.classes);
  CHECK(refines(again.left, stable.left));
  CHECK(refines(stable.left, again.left));
}

TEST_CASE("one refinement splits the identity pairs of cyclic(4) vs klein4 (k=2, version I)") {
  Group z4 = named("cyclic(4)");
  Group v4 = named("klein4");
  auto run = run_wl(z4, v4, 2, 2, WlVersion::I);
  CHECK(identity_colors_equal(run.rounds[0], z4, v4));
  REQUIRE(run.rounds.size() >= 2);
  CHECK_FALSE(identity_colors_equal(run.rounds[1], z4, v4));
  CHECK(first_identity_difference(run, z4, v4) == 1);
  // stabilizes quickly, with unequal multisets
  CHECK(run.trace.stable_round >= 0);
  CHECK(run.trace.stable_round <= 3);
  CHECK_FALSE(multisets_equal(run.stable()));
}

TEST_CASE("trivial groups stabilize at round 0") {
  Group t1 = named("cyclic(1)");
  Group t2 = named("cyclic(1)");
  auto [stable, trace] = stable_coloring(t1, t2, 2, 2, WlVersion::II);
  CHECK(trace.stable_round == 0);
  CHECK(multisets_equal(stable));
}

TEST_CASE("identical tables give tag-symmetric colorings") {
  Group a = named("quaternion8");
  Group b = named("quaternion8");
  for (int q : {1, 2}) {
    auto [stable, trace] = stable_coloring(a, b, 2, q, WlVersion::II);
    CHECK(stable.left == stable.right);
  }
}

TEST_CASE("the 2-ary partition refines the 1-ary partition at every round") {
  struct Pair {
    const char* a;
    const char* b;
  };
  for (auto [na, nb] : {Pair{"cyclic(4)", "klein4"}, Pair{"dihedral(4)", "quaternion8"},
                        Pair{"cyclic(6)", "symmetric(3)"}}) {
    Group a = named(na);
    Group b = named(nb);
    for (auto version : {WlVersion::I, WlVersion::II}) {
      auto run1 = run_wl(a, b, 2, 1, version);
      auto run2 = run_wl(a, b, 2, 2, version);
      int rounds = std::max(run1.rounds.size(), run2.rounds.size());
      for (int r = 0; r < rounds; ++r) {
        const auto& c1 = run1.at_round(r);
        const auto& c2 = run2.at_round(r);
        std::vector<int> joint1 = c1.left;
        joint1.insert(joint1.end(), c1.right.begin(), c1.right.end());
        std::vector<int> joint2 = c2.left;
        joint2.insert(joint2.end(), c2.right.begin(), c2.right.end());
        CHECK(refines(joint2, joint1));
      }
    }
  }
}

TEST_CASE("refinement is monotone and the trace records it") {
  Group a = named("dihedral(4)");
  Group b = named("quaternion8");
  auto run = run_wl(a, b, 2, 2, WlVersion::I);
  for (size_t r = 1; r < run.rounds.size(); ++r) {
    CHECK(run.trace.rounds[r].classes_total >= run.trace.rounds[r - 1].classes_total);
    std::vector<int> fine = run.rounds[r].left;
    fine.insert(fine.end(), run.rounds[r].right.begin(), run.rounds[r].right.end());
    std::vector<int> coarse = run.rounds[r - 1].left;
    coarse.insert(coarse.end(), run.rounds[r - 1].right.begin(), run.rounds[r - 1].right.end());
    CHECK(refines(fine, coarse));
  }
  CHECK(run.trace.stable_round >= 0);
}

TEST_CASE("soundness under relabeling, k <= 3") {
  Rng rng(2027);
  for (const char* name : {"cyclic(8)", "dihedral(4)", "quaternion8"}) {
    Group g = named(name);
    Group h = relabeled(g, rng);
    for (int q : {1, 2}) {
      for (auto version : {WlVersion::I, WlVersion::II}) {
        CHECK_FALSE(distinguishes(g, h, 1, -1, q, version));
        CHECK_FALSE(distinguishes(g, h, 2, -1, q, version));
        CHECK_FALSE(distinguishes(g, h, 3, -1, q, version));
      }
    }
  }
}

TEST_CASE("version II distinctions imply version I distinctions two pebbles later") {
  Group z4 = named("cyclic(4)");
  Group v4 = named("klein4");
  auto run2 = run_wl(z4, v4, 2, 2, WlVersion::II);
  int r0 = first_identity_difference(run2, z4, v4);
  REQUIRE(r0 >= 0);
  WlOptions opts;
  opts.max_rounds = r0 + 1;
  auto run1 = run_wl(z4, v4, 4, 2, WlVersion::I, opts);
  CHECK_FALSE(identity_colors_equal(run1.at_round(r0 + 1), z4, v4));
}

TEST_CASE("distinguishes short-circuits on unequal orders") {
  Group a = named("cyclic(4)");
  Group b = named("cyclic(6)");
  CHECK(distinguishes(a, b, 2, 0, 2, WlVersion::I));
  CHECK(distinguishes(a, b, 1, -1, 1, WlVersion::II));
}

TEST_CASE("distinguishes cross-checks both stable predicates") {
  struct Pair {
    const char* a;
    const char* b;
    bool expect;
  };
  for (auto [na, nb, expect] : {Pair{"cyclic(4)", "klein4", true},
                                Pair{"dihedral(3)", "symmetric(3)", false},
                                Pair{"cyclic(6)", "symmetric(3)", true}}) {
    Group a = named(na);
    Group b = named(nb);
    for (auto version : {WlVersion::I, WlVersion::II}) {
      CHECK(distinguishes(a, b, 2, -1, 2, version) == expect);
    }
  }
}

TEST_CASE("stable colorings are identical across thread counts") {
  Group a = named("cyclic(12)");
  Group b = named("alternating(4)");
  for (int q : {1, 2}) {
    WlOptions t1;
    t1.threads = 1;
    WlOptions t8;
    t8.threads = 8;
    auto run_a = run_wl(a, b, 2, q, WlVersion::II, t1);
    auto run_b = run_wl(a, b, 2, q, WlVersion::II, t8);
    REQUIRE(run_a.rounds.size() == run_b.rounds.size());
    for (size_t r = 0; r < run_a.rounds.size(); ++r) {
      CHECK(run_a.rounds[r].left == run_b.rounds[r].left);
      CHECK(run_a.rounds[r].right == run_b.rounds[r].right);
    }
    CHECK(run_a.trace.stable_round == run_b.trace.stable_round);
  }
}

TEST_CASE("scale caps are enforced and overridable") {
  Group big = make_named(GroupName::cyclic(300));
  Group big2 = make_named(GroupName::cyclic(300));
  CHECK_THROWS_AS(initial_coloring(big, big2, 2, 2, WlVersion::I), error);
  Group mid = make_named(GroupName::cyclic(44));
  Group mid2 = make_named(GroupName::cyclic(44));
  CHECK_THROWS_AS(initial_coloring(mid, mid2, 3, 2, WlVersion::I), error);
  CHECK_THROWS_AS(initial_coloring(big, big2, 0, 2, WlVersion::I), error);
  CHECK_THROWS_AS(initial_coloring(big, big2, 2, 3, WlVersion::I), error);
}
