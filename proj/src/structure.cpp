#include "gwl/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gwl {

std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (int a = 0; a < n; ++a) {
      int y = g.conj(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<SubgroupSet> minimal_normal_subgroups(const Group& g) {
  std::vector<std::vector<int>> closures;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == g.identity()) continue;
    auto sub = generate(g, cls);  // = normal closure of any class member
    closures.push_back(std::move(sub.elements));
  }
  std::sort(closures.begin(), closures.end());
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());

  std::vector<SubgroupSet> out;
  for (const auto& n : closures) {
    bool minimal = true;
    for (const auto& m : closures) {
      if (m.size() < n.size() && std::includes(n.begin(), n.end(), m.begin(), m.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(SubgroupSet{&g, n});
  }
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

SubgroupSet socle(const Group& g) {
  std::vector<int> members;
  for (const auto& n : minimal_normal_subgroups(g)) {
    members.insert(members.end(), n.elements.begin(), n.elements.end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return generate(g, members);
}

bool is_abelian_subset(const Group& g, std::span<const int> elements) {
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = i + 1; j < elements.size(); ++j) {
      if (g.mul(elements[i], elements[j]) != g.mul(elements[j], elements[i])) return false;
    }
  }
  return true;
}

SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> commutators;
  for (int a : h.elements) {
    for (int b : h.elements) {
      int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  std::sort(commutators.begin(), commutators.end());
  return generate(g, commutators);
}

bool is_solvable_subgroup(const Group& g, const SubgroupSet& h) {
  SubgroupSet cur = h;
  for (;;) {
    if (cur.size() == 1) return true;
    SubgroupSet next = derived_subgroup(g, cur);
    if (next.size() == cur.size()) return false;  // perfect, nontrivial
    cur = std::move(next);
  }
}

bool is_simple_group(const Group& g) {
  if (g.order() == 1) return false;
  auto mins = minimal_normal_subgroups(g);
  return mins.size() == 1 && mins[0].size() == g.order();
}

SubgroupSet solvable_radical(const Group& g) {
  SubgroupSet rad{&g, {g.identity()}};
  for (;;) {
    // Inspect g/rad; avoid materializing the quotient while rad is trivial.
    std::optional<Quotient> q;
    const Group* cur = &g;
    if (rad.size() > 1) {
      q = quotient(g, rad);
      cur = &q->group;
    }
    std::vector<int> abelian_members;
    for (const auto& n : minimal_normal_subgroups(*cur)) {
      if (is_abelian_subset(*cur, n.elements)) {
        abelian_members.insert(abelian_members.end(), n.elements.begin(), n.elements.end());
      }
    }
    if (abelian_members.empty()) break;
    std::sort(abelian_members.begin(), abelian_members.end());
    abelian_members.erase(std::unique(abelian_members.begin(), abelian_members.end()),
                          abelian_members.end());
    SubgroupSet step = generate(*cur, abelian_members);
    if (!q) {
      rad = std::move(step);
    } else {
      std::vector<int> pre;
      for (int x = 0; x < g.order(); ++x) {
        if (step.contains(q->projection[x])) pre.push_back(x);
      }
      rad = SubgroupSet{&g, std::move(pre)};
    }
  }

  // Certify: solvable, normal, and the quotient has no abelian minimal
  // normal subgroup left.
  if (!is_solvable_subgroup(g, rad)) raise(errc::internal, "radical candidate is not solvable");
  if (!is_normal(g, rad)) raise(errc::internal, "radical candidate is not normal");
  if (rad.size() < g.order()) {
    std::optional<Quotient> q;
    const Group* cur = &g;
    if (rad.size() > 1) {
      q = quotient(g, rad);
      cur = &q->group;
    }
    for (const auto& n : minimal_normal_subgroups(*cur)) {
      if (is_abelian_subset(*cur, n.elements)) {
        raise(errc::internal, "radical candidate is not maximal");
      }
    }
  }
  return rad;
}

bool is_semisimple(const Group& g) {
  for (const auto& n : minimal_normal_subgroups(g)) {
    if (is_abelian_subset(g, n.elements)) return false;
  }
  return true;
}

SocleDecomposition soc_factors(const Group& g) {
  if (!is_semisimple(g)) raise(errc::not_semisimple, "group has an abelian normal subgroup");
  SocleDecomposition dec;
  dec.parent = &g;
  dec.socle = socle(g);

  if (dec.socle.size() == 1) {
    // Trivial group: empty factor list.
    return dec;
  }

  // The simple factors are the minimal normal subgroups of the socle itself.
  Group socg = subgroup_group(g, dec.socle);
  for (const auto& local : minimal_normal_subgroups(socg)) {
    std::vector<int> members;
    members.reserve(local.elements.size());
    for (int i : local.elements) members.push_back(dec.socle.elements[i]);
    std::sort(members.begin(), members.end());
    dec.factors.push_back(SubgroupSet{&g, std::move(members)});
  }
  std::sort(dec.factors.begin(), dec.factors.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return a.elements < b.elements; });

  long long product = 1;
  for (const auto& f : dec.factors) {
    if (is_abelian_subset(g, f.elements)) raise(errc::internal, "abelian socle factor");
    Group fg = subgroup_group(g, f);
    if (!is_simple_group(fg)) raise(errc::internal, "socle factor is not simple");
    product *= f.size();
  }
  if (product != dec.socle.size()) raise(errc::internal, "socle factor orders do not multiply up");

  // Generating pairs, lexicographically first per factor.
  for (const auto& f : dec.factors) {
    bool found = false;
    for (size_t xi = 0; xi < f.elements.size() && !found; ++xi) {
      for (size_t yi = 0; yi < f.elements.size() && !found; ++yi) {
        int pair[2] = {f.elements[xi], f.elements[yi]};
        if (generate(g, pair) == f) {
          dec.gen_pairs.emplace_back(pair[0], pair[1]);
          found = true;
        }
      }
    }
    if (!found) raise(errc::internal, "socle factor has no 2-element generating pair");
  }

  // Product of the other factors, per factor.
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    std::vector<int> gens;
    for (size_t j = 0; j < dec.factors.size(); ++j) {
      if (j == i) continue;
      gens.push_back(dec.gen_pairs[j].first);
      gens.push_back(dec.gen_pairs[j].second);
    }
    dec.cofactors.push_back(generate(g, gens).elements);
  }
  return dec;
}

namespace {

int factor_index_of(const SocleDecomposition& dec, int element) {
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    if (dec.factors[i].contains(element)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

PermAction perm_action(const SocleDecomposition& dec) {
  const Group& g = *dec.parent;
  PermAction act;
  act.domain = &g;
  const int n = g.order();
  const int m = static_cast<int>(dec.factors.size());

  std::vector<int> pos_of(n, -1);
  for (size_t p = 0; p < dec.socle.elements.size(); ++p) pos_of[dec.socle.elements[p]] = static_cast<int>(p);

  act.factor_perm.resize(n);
  act.socle_perm.resize(n);
  for (int x = 0; x < n; ++x) {
    auto& fp = act.factor_perm[x];
    fp.resize(m);
    for (int i = 0; i < m; ++i) {
      int image = factor_index_of(dec, g.conj(x, dec.gen_pairs[i].first));
      if (image < 0) raise(errc::internal, "conjugate of a factor generator left the socle");
      fp[i] = image;
    }
    auto& sp = act.socle_perm[x];
    sp.resize(dec.socle.elements.size());
    for (size_t p = 0; p < dec.socle.elements.size(); ++p) {
      int image = pos_of[g.conj(x, dec.socle.elements[p])];
      if (image < 0) raise(errc::internal, "socle is not normal");
      sp[p] = image;
    }
  }
  return act;
}

int weight(const SocleDecomposition& dec, int s) {
  const Group& g = *dec.parent;
  if (s < 0 || s >= g.order()) raise(errc::parameter_out_of_range, "element index out of range");
  if (!dec.socle.contains(s)) {
    std::ostringstream ss;
    ss << "element " << s << " is not in the socle";
    raise(errc::not_in_socle, ss.str());
  }
  int w = 0;
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    // Component in S_i: the unique member of S_i meeting the coset
    // s * (product of the other factors).
    int component = -1;
    for (int t : dec.cofactors[i]) {
      int p = g.mul(s, t);
      if (dec.factors[i].contains(p)) {
        component = p;
        break;
      }
    }
    if (component < 0) raise(errc::internal, "socle element has no component in a factor");
    if (component != g.identity()) ++w;
  }
  return w;
}

SubgroupSet pker(const SocleDecomposition& dec) {
  const Group& g = *dec.parent;
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool fixes_all = true;
    for (size_t i = 0; i < dec.factors.size() && fixes_all; ++i) {
      // x fixes S_i setwise iff it keeps both generators inside.
      fixes_all = dec.factors[i].contains(g.conj(x, dec.gen_pairs[i].first)) &&
                  dec.factors[i].contains(g.conj(x, dec.gen_pairs[i].second));
    }
    if (fixes_all) out.push_back(x);
  }
  return SubgroupSet{&g, std::move(out)};
}

SubgroupSet pker(const Group& g) { return pker(soc_factors(g)); }

bool tuple_partial_iso(const Group& g, std::span<const int> xs,
                       const Group& h, std::span<const int> ys) {
  if (xs.size() != ys.size()) raise(errc::length_mismatch, "tuples have different lengths");
  const size_t k = xs.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if ((xs[i] == xs[j]) != (ys[i] == ys[j])) return false;
    }
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const int px = g.mul(xs[i], xs[j]);
      const int py = h.mul(ys[i], ys[j]);
      for (size_t l = 0; l < k; ++l) {
        if ((px == xs[l]) != (py == ys[l])) return false;
      }
    }
  }
  return true;
}

std::vector<int> marked_type_signature(const Group& g, std::span<const int> xs) {
  const int k = static_cast<int>(xs.size());
  for (int x : xs) {
    if (x < 0 || x >= g.order()) raise(errc::parameter_out_of_range, "element index out of range");
  }
  std::vector<int> disc(g.order(), -1);
  std::vector<int> order;
  disc[g.identity()] = 0;
  order.push_back(g.identity());
  for (size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    for (int i = 0; i < k; ++i) {
      const int v = g.mul(u, xs[i]);
      if (disc[v] < 0) {
        disc[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
    }
  }
  const int m = static_cast<int>(order.size());
  std::vector<int> sig;
  sig.reserve(2 + k + static_cast<size_t>(m) * k);
  sig.push_back(k);
  sig.push_back(m);
  for (int i = 0; i < k; ++i) sig.push_back(disc[xs[i]]);
  for (int t = 0; t < m; ++t) {
    for (int i = 0; i < k; ++i) sig.push_back(disc[g.mul(order[t], xs[i])]);
  }
  return sig;
}

bool tuple_marked_iso(const Group& g, std::span<const int> xs,
                      const Group& h, std::span<const int> ys) {
  if (xs.size() != ys.size()) raise(errc::length_mismatch, "tuples have different lengths");
  return marked_type_signature(g, xs) == marked_type_signature(h, ys);
}

std::optional<std::vector<int>> extend_socle_isomorphism(
    const Group& g, const Group& h, const std::vector<std::pair<int, int>>& socle_map) {
  SubgroupSet soc_g = socle(g);
  SubgroupSet soc_h = socle(h);

  // socle_map must be a bijective homomorphism Soc(g) -> Soc(h).
  std::vector<int> f(g.order(), -1);
  std::vector<int> f_inv(h.order(), -1);
  if (socle_map.size() != soc_g.elements.size() || socle_map.size() != soc_h.elements.size()) {
    raise(errc::not_socle_iso, "map does not pair the two socles");
  }
  for (auto [a, b] : socle_map) {
    if (a < 0 || a >= g.order() || b < 0 || b >= h.order()) {
      raise(errc::not_socle_iso, "map entry out of range");
    }
    if (!soc_g.contains(a) || !soc_h.contains(b)) {
      raise(errc::not_socle_iso, "map entry outside the socles");
    }
    if (f[a] >= 0 || f_inv[b] >= 0) raise(errc::not_socle_iso, "map is not a bijection");
    f[a] = b;
    f_inv[b] = a;
  }
  for (int a : soc_g.elements) {
    for (int b : soc_g.elements) {
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) {
        raise(errc::not_socle_iso, "map is not a homomorphism");
      }
    }
  }

  if (centralizer(g, soc_g.elements).size() != 1 || centralizer(h, soc_h.elements).size() != 1) {
    raise(errc::nontrivial_centralizer, "a socle has a nontrivial centralizer");
  }

  if (g.order() != h.order()) return std::nullopt;

  // Index of each h-element by its conjugation action on Soc(h). Distinct
  // elements act distinctly because the centralizer is trivial.
  std::vector<int> pos_h(h.order(), -1);
  for (size_t p = 0; p < soc_h.elements.size(); ++p) pos_h[soc_h.elements[p]] = static_cast<int>(p);
  const size_t socle_size = soc_h.elements.size();

  auto action_key = [socle_size](const std::vector<int>& perm) {
    std::string key(reinterpret_cast<const char*>(perm.data()), socle_size * sizeof(int));
    return key;
  };

  std::unordered_map<std::string, int> by_action;
  std::vector<int> perm(socle_size);
  for (int x = 0; x < h.order(); ++x) {
    for (size_t p = 0; p < socle_size; ++p) perm[p] = pos_h[h.conj(x, soc_h.elements[p])];
    by_action.emplace(action_key(perm), x);
  }

  std::vector<int> lifted(g.order(), -1);
  std::vector<char> hit(h.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    // f o (conj by x) o f^-1, as a permutation of Soc(h) positions.
    for (size_t p = 0; p < socle_size; ++p) {
      perm[p] = pos_h[f[g.conj(x, f_inv[soc_h.elements[p]])]];
    }
    auto it = by_action.find(action_key(perm));
    if (it == by_action.end()) return std::nullopt;
    lifted[x] = it->second;
    if (hit[it->second]) return std::nullopt;
    hit[it->second] = 1;
  }

  // Verify: bijective homomorphism extending the socle map.
  for (int a : soc_g.elements) {
    if (lifted[a] != f[a]) return std::nullopt;
  }
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (lifted[g.mul(a, b)] != h.mul(lifted[a], lifted[b])) return std::nullopt;
    }
  }
  return lifted;
}

namespace {

struct IsoSearch {
  const Group& g;
  const Group& h;
  const std::function<bool(const std::vector<int>&)>& visit;
  uint64_t budget;
  uint64_t nodes = 0;
  std::vector<int> gens;
  std::vector<std::vector<int>> g_prefix_sigs;  // signature of gens[0..j]

  bool stopped = false;

  void tick() {
    if (++nodes > budget) raise(errc::budget_exceeded, "isomorphism search budget exhausted");
  }

  // Extends the image tuple one generator at a time, pruning by marked type.
  void descend(std::vector<int>& images) {
    const size_t depth = images.size();
    if (depth == gens.size()) {
      emit(images);
      return;
    }
    for (int cand = 0; cand < h.order() && !stopped; ++cand) {
      images.push_back(cand);
      tick();
      if (marked_type_signature(h, images) == g_prefix_sigs[depth]) {
        descend(images);
      }
      images.pop_back();
    }
  }

  // A full image tuple with matching signature: read the isomorphism off the
  // two closure enumerations.
  void emit(const std::vector<int>& images) {
    std::vector<int> map(g.order(), -1);
    std::vector<int> order_g, order_h;
    std::vector<int> disc_g(g.order(), -1), disc_h(h.order(), -1);
    disc_g[g.identity()] = 0;
    order_g.push_back(g.identity());
    disc_h[h.identity()] = 0;
    order_h.push_back(h.identity());
    for (size_t head = 0; head < order_g.size(); ++head) {
      for (size_t i = 0; i < gens.size(); ++i) {
        int vg = g.mul(order_g[head], gens[i]);
        int vh = h.mul(order_h[head], images[i]);
        if (disc_g[vg] < 0) {
          disc_g[vg] = static_cast<int>(order_g.size());
          order_g.push_back(vg);
          order_h.push_back(vh);
        }
      }
    }
    for (size_t t = 0; t < order_g.size(); ++t) map[order_g[t]] = order_h[t];
    if (!visit(map)) stopped = true;
  }
};

}  // namespace

bool enumerate_isomorphisms(const Group& g, const Group& h,
                            const std::function<bool(const std::vector<int>&)>& visit,
                            const IsoSearchOptions& options) {
  if (g.order() != h.order()) return true;
  if (g.order() == 1) return visit(std::vector<int>{h.identity()});

  IsoSearch search{g, h, visit, options.node_budget, 0, {}, {}, false};

  // Greedy generating sequence: lowest element index outside the closure.
  SubgroupSet closed = generate(g, {});
  while (closed.size() < g.order()) {
    int missing = 0;
    while (closed.contains(missing)) ++missing;
    search.gens.push_back(missing);
    closed = generate(g, search.gens);
  }
  for (size_t j = 1; j <= search.gens.size(); ++j) {
    search.g_prefix_sigs.push_back(
        marked_type_signature(g, std::span<const int>(search.gens.data(), j)));
  }

  std::vector<int> images;
  images.reserve(search.gens.size());
  search.descend(images);
  return !search.stopped;
}

std::optional<std::vector<int>> brute_force_isomorphic(const Group& g, const Group& h,
                                                       const IsoSearchOptions& options) {
  std::optional<std::vector<int>> witness;
  enumerate_isomorphisms(
      g, h,
      [&witness](const std::vector<int>& map) {
        witness = map;
        return false;  // first witness suffices
      },
      options);
  return witness;
}

}  // namespace gwl
