#pragma once

#include <span>
#include <string>
#include <vector>

#include "gwl/error.hpp"

namespace gwl {

/// A finite group in the Cayley-table model. Elements are dense indices
/// 0..n-1 with an arbitrary labeling; the identity index is discovered
/// during validation, never assumed to be 0.
///
/// Construction validates closure, identity, inverses and associativity
/// (Light's test on a generating set, with a full lexicographic rescan to
/// locate the first violating triple when the fast test fails). Instances
/// are immutable and safe to share across threads.
class Group {
 public:
  static constexpr int default_max_order = 10000;

  static Group from_table(const std::vector<std::vector<int>>& rows,
                          int max_order = default_max_order);
  /// Same validation, but takes the row-major table by value to avoid a copy.
  static Group from_flat_table(int n, std::vector<int> table,
                               int max_order = default_max_order);

  int order() const noexcept { return n_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  /// Smallest m >= 1 with g^m = identity.
  int element_order(int g) const;

  const std::vector<int>& flat_table() const noexcept { return table_; }

 private:
  Group() = default;

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Sorted set of element indices of a parent group, closed under product
/// and inverse and containing the identity. Equality is structural.
struct SubgroupSet {
  const Group* parent = nullptr;
  std::vector<int> elements;  // ascending

  int size() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const SubgroupSet& other) const { return elements == other.elements; }
};

/// Closure of gens (plus the identity) under the group product.
SubgroupSet generate(const Group& g, std::span<const int> gens);

/// Smallest normal subgroup containing s.
SubgroupSet normal_closure(const Group& g, std::span<const int> s);

bool is_normal(const Group& g, const SubgroupSet& h);
SubgroupSet center(const Group& g);
SubgroupSet centralizer(const Group& g, std::span<const int> s);

struct Quotient {
  Group group;
  std::vector<int> projection;  // element -> coset index
};

/// Quotient by a normal subgroup; cosets are numbered by first occurrence
/// of a member when scanning elements in index order.
Quotient quotient(const Group& g, const SubgroupSet& n);

/// The subgroup as a standalone group; local index i corresponds to
/// h.elements[i] in the parent.
Group subgroup_group(const Group& g, const SubgroupSet& h);

/// Symbolic constructor for the named-group family.
struct GroupName {
  enum class Tag {
    cyclic,
    dihedral,
    symmetric,
    alternating,
    quaternion8,
    direct_product,
    swap_wreath,
  };

  Tag tag = Tag::cyclic;
  int param = 0;
  std::vector<GroupName> children;

  static GroupName cyclic(int n);
  static GroupName dihedral(int m);
  static GroupName symmetric(int m);
  static GroupName alternating(int m);
  static GroupName quaternion8();
  static GroupName direct_product(GroupName a, GroupName b);
  static GroupName swap_wreath(GroupName t);

  std::string str() const;
};

/// Builds the named group with its documented deterministic element order:
///   cyclic(n): residues 0..n-1
///   dihedral(m): rotations r^a first (index a), then reflections s*r^a (index m+a)
///   symmetric(m)/alternating(m): permutations in lexicographic one-line order,
///     product (p*q)(x) = p(q(x))
///   quaternion8: 1,-1,i,-i,j,-j,k,-k
///   direct_product(A,B): index a*|B|+b
///   swap_wreath(T): (t1,t2)*sigma^s at index s*|T|^2 + t1*|T| + t2, where
///     sigma swaps the coordinates
Group make_named(const GroupName& name, int max_order = Group::default_max_order);

}  // namespace gwl
