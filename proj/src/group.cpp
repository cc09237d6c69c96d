#include "gwl/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace gwl {

namespace {

std::string triple_str(int a, int b, int c) {
  std::ostringstream ss;
  ss << "(a=" << a << ", b=" << b << ", c=" << c << ")";
  return ss.str();
}

// Closure of seed under right-multiplication by gens, as a sorted vector.
// Works on any closed table, associative or not; used both by generate()
// and by the associativity check below.
std::vector<int> right_closure(int n, const std::vector<int>& table,
                               int identity, std::span<const int> gens) {
  std::vector<char> in(n, 0);
  std::vector<int> out;
  std::vector<int> queue;
  in[identity] = 1;
  out.push_back(identity);
  queue.push_back(identity);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int s : gens) {
      int v = table[static_cast<size_t>(u) * n + s];
      if (!in[v]) {
        in[v] = 1;
        out.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Group Group::from_table(const std::vector<std::vector<int>>& rows, int max_order) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) raise(errc::not_closed, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) {
      std::ostringstream ss;
      ss << "table is not square: row " << a << " has " << rows[a].size()
         << " entries, expected " << n;
      raise(errc::not_closed, ss.str());
    }
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return from_flat_table(n, std::move(flat), max_order);
}

Group Group::from_flat_table(int n, std::vector<int> table, int max_order) {
  if (n <= 0) raise(errc::not_closed, "empty table");
  if (n > max_order) {
    std::ostringstream ss;
    ss << "order " << n << " exceeds the configured limit " << max_order;
    raise(errc::order_limit, ss.str());
  }
  if (table.size() != static_cast<size_t>(n) * n) raise(errc::not_closed, "table size mismatch");

  // Closure.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<size_t>(a) * n + b];
      if (v < 0 || v >= n) {
        std::ostringstream ss;
        ss << "entry " << triple_str(a, b, v) << " is outside [0, " << n << ")";
        raise(errc::not_closed, ss.str());
      }
    }
  }

  // Identity: two-sided, discovered.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table[static_cast<size_t>(e) * n + x] == x &&
           table[static_cast<size_t>(x) * n + e] == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) raise(errc::no_identity, "no two-sided identity element");

  // Associativity. Light's test: pick a generating set S greedily (lowest
  // missing index) and check (x*s)*y = x*(s*y) for all x, y and s in S.
  // The set of elements associating in the middle slot is closed under the
  // product, so covering a generating set covers everything. On failure,
  // rescan lexicographically so the reported triple is the first one.
  {
    std::vector<int> gens;
    std::vector<int> closed = right_closure(n, table, identity, gens);
    while (static_cast<int>(closed.size()) < n) {
      int missing = 0;
      for (int x = 0; x < n; ++x) {
        if (!std::binary_search(closed.begin(), closed.end(), x)) {
          missing = x;
          break;
        }
      }
      gens.push_back(missing);
      closed = right_closure(n, table, identity, gens);
    }
    bool light_ok = true;
    for (int s : gens) {
      for (int x = 0; x < n && light_ok; ++x) {
        const int xs = table[static_cast<size_t>(x) * n + s];
        for (int y = 0; y < n; ++y) {
          if (table[static_cast<size_t>(xs) * n + y] !=
              table[static_cast<size_t>(x) * n + table[static_cast<size_t>(s) * n + y]]) {
            light_ok = false;
            break;
          }
        }
      }
      if (!light_ok) break;
    }
    if (!light_ok) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const int ab = table[static_cast<size_t>(a) * n + b];
          for (int c = 0; c < n; ++c) {
            const int bc = table[static_cast<size_t>(b) * n + c];
            if (table[static_cast<size_t>(ab) * n + c] != table[static_cast<size_t>(a) * n + bc]) {
              std::ostringstream ss;
              ss << "(a*b)*c != a*(b*c) at " << triple_str(a, b, c);
              raise(errc::not_associative, ss.str());
            }
          }
        }
      }
      raise(errc::internal, "Light's test failed but no violating triple found");
    }
  }

  // Inverses.
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[static_cast<size_t>(x) * n + y] == identity &&
          table[static_cast<size_t>(y) * n + x] == identity) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] < 0) {
      std::ostringstream ss;
      ss << "element " << x << " has no two-sided inverse";
      raise(errc::missing_inverse, ss.str());
    }
  }

  Group g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  return g;
}

int Group::element_order(int g) const {
  if (g < 0 || g >= n_) raise(errc::parameter_out_of_range, "element index out of range");
  int m = 1;
  int x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++m;
  }
  return m;
}

bool SubgroupSet::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

SubgroupSet generate(const Group& g, std::span<const int> gens) {
  for (int x : gens) {
    if (x < 0 || x >= g.order()) raise(errc::parameter_out_of_range, "generator out of range");
  }
  std::vector<int> gen_list(gens.begin(), gens.end());
  std::sort(gen_list.begin(), gen_list.end());
  gen_list.erase(std::unique(gen_list.begin(), gen_list.end()), gen_list.end());
  return SubgroupSet{&g, right_closure(g.order(), g.flat_table(), g.identity(), gen_list)};
}

SubgroupSet normal_closure(const Group& g, std::span<const int> s) {
  // Closure of all conjugates of s.
  std::vector<char> seen(g.order(), 0);
  std::vector<int> conjugates;
  for (int x : s) {
    if (x < 0 || x >= g.order()) raise(errc::parameter_out_of_range, "element out of range");
    for (int a = 0; a < g.order(); ++a) {
      int y = g.conj(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        conjugates.push_back(y);
      }
    }
  }
  std::sort(conjugates.begin(), conjugates.end());
  return generate(g, conjugates);
}

bool is_normal(const Group& g, const SubgroupSet& h) {
  for (int a = 0; a < g.order(); ++a) {
    for (int x : h.elements) {
      if (!h.contains(g.conj(a, x))) return false;
    }
  }
  return true;
}

SubgroupSet center(const Group& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int a = 0; a < g.order(); ++a) {
      if (g.mul(x, a) != g.mul(a, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return SubgroupSet{&g, std::move(out)};
}

SubgroupSet centralizer(const Group& g, std::span<const int> s) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int a : s) {
      if (g.mul(x, a) != g.mul(a, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(x);
  }
  return SubgroupSet{&g, std::move(out)};
}

Quotient quotient(const Group& g, const SubgroupSet& n) {
  if (!is_normal(g, n)) raise(errc::not_normal, "subgroup is not normal");
  const int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.elements) coset_of[g.mul(x, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      table[static_cast<size_t>(a) * m + b] = coset_of[g.mul(reps[a], reps[b])];
    }
  }
  return Quotient{Group::from_flat_table(m, std::move(table)), std::move(coset_of)};
}

Group subgroup_group(const Group& g, const SubgroupSet& h) {
  const int m = h.size();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) local[h.elements[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int p = g.mul(h.elements[a], h.elements[b]);
      if (local[p] < 0) raise(errc::parameter_out_of_range, "set is not closed under the product");
      table[static_cast<size_t>(a) * m + b] = local[p];
    }
  }
  return Group::from_flat_table(m, std::move(table));
}

GroupName GroupName::cyclic(int n) { return GroupName{Tag::cyclic, n, {}}; }
GroupName GroupName::dihedral(int m) { return GroupName{Tag::dihedral, m, {}}; }
GroupName GroupName::symmetric(int m) { return GroupName{Tag::symmetric, m, {}}; }
GroupName GroupName::alternating(int m) { return GroupName{Tag::alternating, m, {}}; }
GroupName GroupName::quaternion8() { return GroupName{Tag::quaternion8, 0, {}}; }

GroupName GroupName::direct_product(GroupName a, GroupName b) {
  GroupName n{Tag::direct_product, 0, {}};
  n.children.push_back(std::move(a));
  n.children.push_back(std::move(b));
  return n;
}

GroupName GroupName::swap_wreath(GroupName t) {
  GroupName n{Tag::swap_wreath, 0, {}};
  n.children.push_back(std::move(t));
  return n;
}

std::string GroupName::str() const {
  std::ostringstream ss;
  switch (tag) {
    case Tag::cyclic: ss << "cyclic(" << param << ")"; break;
    case Tag::dihedral: ss << "dihedral(" << param << ")"; break;
    case Tag::symmetric: ss << "symmetric(" << param << ")"; break;
    case Tag::alternating: ss << "alternating(" << param << ")"; break;
    case Tag::quaternion8: ss << "quaternion8"; break;
    case Tag::direct_product:
      ss << "direct_product(" << children[0].str() << "," << children[1].str() << ")";
      break;
    case Tag::swap_wreath: ss << "swap_wreath(" << children[0].str() << ")"; break;
  }
  return ss.str();
}

namespace {

std::vector<std::vector<int>> permutations_lex(int m, bool even_only) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          if (p[i] > p[j]) ++inversions;
        }
      }
      if (inversions % 2 != 0) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group make_permutation_group(int m, bool even_only, int max_order) {
  auto perms = permutations_lex(m, even_only);
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[perms[i]] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<int> composed(m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < m; ++x) composed[x] = perms[a][perms[b][x]];
      table[static_cast<size_t>(a) * n + b] = index_of.at(composed);
    }
  }
  return Group::from_flat_table(n, std::move(table), max_order);
}

Group make_quaternion8(int max_order) {
  // axes: 0=1, 1=i, 2=j, 3=k; element index = 2*axis + (sign < 0)
  static constexpr int axis_table[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  static constexpr int sign_table[4][4] = {
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  };
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_table[ax][bx];
      table[static_cast<size_t>(a) * 8 + b] = 2 * axis_table[ax][bx] + (sign < 0 ? 1 : 0);
    }
  }
  return Group::from_flat_table(8, std::move(table), max_order);
}

}  // namespace

Group make_named(const GroupName& name, int max_order) {
  using Tag = GroupName::Tag;
  switch (name.tag) {
    case Tag::cyclic: {
      const int n = name.param;
      if (n < 1 || n > max_order) raise(errc::parameter_out_of_range, "cyclic(n) requires 1 <= n <= limit");
      std::vector<int> table(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
      }
      return Group::from_flat_table(n, std::move(table), max_order);
    }
    case Tag::dihedral: {
      const int m = name.param;
      if (m < 1 || 2 * m > max_order) raise(errc::parameter_out_of_range, "dihedral(m) requires 1 <= m and 2m <= limit");
      const int n = 2 * m;
      std::vector<int> table(static_cast<size_t>(n) * n);
      for (int i = 0; i < 2; ++i) {
        for (int a = 0; a < m; ++a) {
          for (int j = 0; j < 2; ++j) {
            for (int b = 0; b < m; ++b) {
              // s^i r^a * s^j r^b = s^(i^j) r^((-1)^j a + b)
              int rot = ((j ? m - a : a) + b) % m;
              table[static_cast<size_t>(i * m + a) * n + (j * m + b)] = (i ^ j) * m + rot;
            }
          }
        }
      }
      return Group::from_flat_table(n, std::move(table), max_order);
    }
    case Tag::symmetric: {
      if (name.param < 1 || name.param > 6) {
        raise(errc::parameter_out_of_range, "symmetric(m) requires 1 <= m <= 6");
      }
      return make_permutation_group(name.param, false, max_order);
    }
    case Tag::alternating: {
      if (name.param < 1 || name.param > 7) {
        raise(errc::parameter_out_of_range, "alternating(m) requires 1 <= m <= 7");
      }
      return make_permutation_group(name.param, true, max_order);
    }
    case Tag::quaternion8:
      return make_quaternion8(max_order);
    case Tag::direct_product: {
      Group a = make_named(name.children[0], max_order);
      Group b = make_named(name.children[1], max_order);
      const long long n = static_cast<long long>(a.order()) * b.order();
      if (n > max_order) raise(errc::parameter_out_of_range, "direct product exceeds the order limit");
      const int na = a.order(), nb = b.order(), nn = static_cast<int>(n);
      std::vector<int> table(static_cast<size_t>(nn) * nn);
      for (int a1 = 0; a1 < na; ++a1) {
        for (int b1 = 0; b1 < nb; ++b1) {
          const int x = a1 * nb + b1;
          for (int a2 = 0; a2 < na; ++a2) {
            for (int b2 = 0; b2 < nb; ++b2) {
              table[static_cast<size_t>(x) * nn + (a2 * nb + b2)] = a.mul(a1, a2) * nb + b.mul(b1, b2);
            }
          }
        }
      }
      return Group::from_flat_table(nn, std::move(table), max_order);
    }
    case Tag::swap_wreath: {
      Group t = make_named(name.children[0], max_order);
      const int m = t.order();
      const long long n = 2LL * m * m;
      if (n > max_order) raise(errc::parameter_out_of_range, "swap_wreath exceeds the order limit");
      const int nn = static_cast<int>(n);
      std::vector<int> table(static_cast<size_t>(nn) * nn);
      auto idx = [m](int s, int t1, int t2) { return s * m * m + t1 * m + t2; };
      for (int s = 0; s < 2; ++s) {
        for (int t1 = 0; t1 < m; ++t1) {
          for (int t2 = 0; t2 < m; ++t2) {
            const int x = idx(s, t1, t2);
            for (int s2 = 0; s2 < 2; ++s2) {
              for (int u1 = 0; u1 < m; ++u1) {
                for (int u2 = 0; u2 < m; ++u2) {
                  // (t1,t2)sigma^s * (u1,u2)sigma^s2: sigma moves across and
                  // swaps the incoming coordinates when s = 1.
                  int y = s == 0 ? idx(s2, t.mul(t1, u1), t.mul(t2, u2))
                                 : idx(1 ^ s2, t.mul(t1, u2), t.mul(t2, u1));
                  table[static_cast<size_t>(x) * nn + idx(s2, u1, u2)] = y;
                }
              }
            }
          }
        }
      }
      return Group::from_flat_table(nn, std::move(table), max_order);
    }
  }
  raise(errc::internal, "unhandled constructor tag");
}

}  // namespace gwl
