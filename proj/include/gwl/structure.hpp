#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gwl/group.hpp"

namespace gwl {

/// Simple direct factors S_1..S_m of the socle of a semisimple group,
/// each with a two-element generating pair, plus the product of the other
/// factors per index (used for the component projection).
struct SocleDecomposition {
  const Group* parent = nullptr;
  SubgroupSet socle;
  std::vector<SubgroupSet> factors;
  std::vector<std::pair<int, int>> gen_pairs;
  std::vector<std::vector<int>> cofactors;  // sorted product set of all other factors
};

/// Conjugation action of the parent group on a socle decomposition:
/// per element, the induced permutation of factor indices and of the
/// socle's member positions. The map g -> permutation is a homomorphism
/// and is faithful on socle positions when the centralizer of the socle
/// is trivial.
struct PermAction {
  const Group* domain = nullptr;
  std::vector<std::vector<int>> factor_perm;  // [g][i] = index of g S_i g^-1
  std::vector<std::vector<int>> socle_perm;   // [g][p] = position of g s_p g^-1
};

std::vector<std::vector<int>> conjugacy_classes(const Group& g);

/// Nontrivial normal subgroups containing no smaller nontrivial normal
/// subgroup, via normal closures of single conjugacy classes. Sorted by
/// (order, elements).
std::vector<SubgroupSet> minimal_normal_subgroups(const Group& g);

SubgroupSet socle(const Group& g);
SubgroupSet solvable_radical(const Group& g);
bool is_semisimple(const Group& g);

bool is_abelian_subset(const Group& g, std::span<const int> elements);
SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h);
bool is_solvable_subgroup(const Group& g, const SubgroupSet& h);
/// Nontrivial with no proper nontrivial normal subgroup.
bool is_simple_group(const Group& g);

SocleDecomposition soc_factors(const Group& g);
PermAction perm_action(const SocleDecomposition& dec);

/// Number of nontrivial components of s across the simple socle factors.
int weight(const SocleDecomposition& dec, int s);

/// Elements whose conjugation fixes every socle factor setwise.
SubgroupSet pker(const Group& g);
SubgroupSet pker(const SocleDecomposition& dec);

/// Equality patterns and visible products agree between the tuples.
bool tuple_partial_iso(const Group& g, std::span<const int> xs,
                       const Group& h, std::span<const int> ys);

/// Canonical transition table of the closure automaton of <xs>: breadth-first
/// enumeration from the identity by right-multiplication with the generators
/// (generators in tuple order per element, elements in discovery order),
/// recording each element's successors plus the discovery indices of the
/// generators themselves. Two tuples get equal signatures iff the map
/// x_i -> y_i extends to an isomorphism of the generated subgroups.
std::vector<int> marked_type_signature(const Group& g, std::span<const int> xs);

bool tuple_marked_iso(const Group& g, std::span<const int> xs,
                      const Group& h, std::span<const int> ys);

/// Lifts an isomorphism f : Soc(G) -> Soc(H) to all of G by matching
/// conjugation actions, when the centralizers of both socles are trivial.
/// Returns the full element map when the lift exists, nothing otherwise.
std::optional<std::vector<int>> extend_socle_isomorphism(
    const Group& g, const Group& h, const std::vector<std::pair<int, int>>& socle_map);

struct IsoSearchOptions {
  uint64_t node_budget = 50'000'000;
};

/// Generator-enumeration isomorphism search: greedy generating sequence of g
/// (repeatedly adding the lowest element index outside the closure), image
/// tuples of h enumerated lexicographically with prefix pruning by marked
/// type. Returns the first witness. Ground-truth oracle for the test suites.
std::optional<std::vector<int>> brute_force_isomorphic(
    const Group& g, const Group& h, const IsoSearchOptions& options = {});

/// Visits every isomorphism g -> h in the same deterministic order; stops
/// early when the visitor returns false. Returns false iff stopped early.
bool enumerate_isomorphisms(const Group& g, const Group& h,
                            const std::function<bool(const std::vector<int>&)>& visit,
                            const IsoSearchOptions& options = {});

}  // namespace gwl
