#pragma once

#include <span>
#include <vector>

#include "gwl/group.hpp"

namespace gwl {

enum class WlVersion { I, II };

const char* version_name(WlVersion v);

enum class Side { left, right };

/// Joint coloring of G^k u H^k at one refinement round. Color ids are dense
/// and shared across the two groups: they are assigned by sorting the full
/// signature list of the joint tuple set, never by hashing, so equal ids
/// always mean equal signatures and runs are reproducible.
struct Coloring {
  int k = 1;
  int q = 2;
  WlVersion version = WlVersion::I;
  int round = 0;
  int n_left = 0;
  int n_right = 0;
  int classes = 0;
  std::vector<int> left;   // color by tuple rank (row-major, first coordinate most significant)
  std::vector<int> right;

  const std::vector<int>& side(Side s) const { return s == Side::left ? left : right; }
  size_t rank(Side s, std::span<const int> tuple) const;
  int color(Side s, std::span<const int> tuple) const;
  int identity_color(Side s, const Group& g) const;
};

struct RefinementTrace {
  struct Round {
    int classes_total = 0;
    int classes_left = 0;
    int classes_right = 0;
  };
  std::vector<Round> rounds;  // entry r describes the round-r coloring
  int stable_round = -1;      // first r with partition(r) == partition(r+1); -1 if capped
};

struct WlOptions {
  int threads = 1;
  int max_rounds = -1;       // -1: iterate to the stable refinement
  bool override_caps = false;
  int max_order_k2 = 256;    // group order caps per tuple length
  int max_order_k3 = 40;
};

/// All rounds of the joint coloring, from the initial coloring to the stable
/// refinement (or the round cap). rounds[r] is the round-r coloring;
/// colorings beyond the stable round equal the stable one.
struct WlRun {
  std::vector<Coloring> rounds;
  RefinementTrace trace;

  const Coloring& at_round(int r) const;
  const Coloring& stable() const { return rounds.back(); }
};

Coloring initial_coloring(const Group& g, const Group& h, int k, int q, WlVersion version,
                          const WlOptions& options = {});
Coloring refine_step(const Group& g, const Group& h, const Coloring& c, int threads = 1);
WlRun run_wl(const Group& g, const Group& h, int k, int q, WlVersion version,
             const WlOptions& options = {});
std::pair<Coloring, RefinementTrace> stable_coloring(const Group& g, const Group& h, int k, int q,
                                                     WlVersion version,
                                                     const WlOptions& options = {});

bool multisets_equal(const Coloring& c);
bool identity_colors_equal(const Coloring& c, const Group& g, const Group& h);

/// Round-r distinguishing predicate: inequality of the identity-tuple colors
/// (groups of different order are distinguished at round 0 before any
/// coloring). r < 0 requests the stable refinement, where the multiset and
/// identity-color predicates are cross-asserted before answering.
bool distinguishes(const Group& g, const Group& h, int k, int r, int q, WlVersion version,
                   const WlOptions& options = {});

/// First round at which the color multisets of the two sides differ, or -1
/// if they agree through the stable refinement.
int first_multiset_difference(const WlRun& run);
/// Same for the identity-tuple colors.
int first_identity_difference(const WlRun& run, const Group& g, const Group& h);

}  // namespace gwl
