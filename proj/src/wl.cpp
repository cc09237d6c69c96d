#include "gwl/wl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gwl/graph_canon.hpp"
#include "gwl/parallel.hpp"
#include "gwl/structure.hpp"

namespace gwl {

const char* version_name(WlVersion v) { return v == WlVersion::I ? "I" : "II"; }

size_t Coloring::rank(Side s, std::span<const int> tuple) const {
  const int n = s == Side::left ? n_left : n_right;
  size_t r = 0;
  for (int x : tuple) r = r * n + static_cast<size_t>(x);
  return r;
}

int Coloring::color(Side s, std::span<const int> tuple) const {
  return side(s)[rank(s, tuple)];
}

int Coloring::identity_color(Side s, const Group& g) const {
  std::vector<int> id(k, g.identity());
  return color(s, id);
}

const Coloring& WlRun::at_round(int r) const {
  if (r < 0) raise(errc::parameter_out_of_range, "negative round");
  if (r < static_cast<int>(rounds.size())) return rounds[r];
  if (trace.stable_round < 0) raise(errc::internal, "round beyond the computed (capped) run");
  return rounds.back();
}

namespace {

void check_params(const Group& g, const Group& h, int k, int q, const WlOptions& options) {
  if (k < 1) raise(errc::parameter_out_of_range, "tuple length must be >= 1");
  if (q != 1 && q != 2) raise(errc::parameter_out_of_range, "arity must be 1 or 2");
  const int n = std::max(g.order(), h.order());
  if (!options.override_caps) {
    if (k == 2 && n > options.max_order_k2) {
      raise(errc::order_limit, "k=2 coloring refuses groups larger than the cap");
    }
    if (k >= 3 && n > options.max_order_k3) {
      raise(errc::order_limit, "k>=3 coloring refuses groups larger than the cap");
    }
    double tuples = 0;
    tuples += std::pow(static_cast<double>(g.order()), k);
    tuples += std::pow(static_cast<double>(h.order()), k);
    if (tuples > double(1 << 22)) {
      raise(errc::order_limit, "joint tuple set too large; raise the caps explicitly");
    }
  }
}

size_t pow_size(int n, int k) {
  size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<size_t>(n);
  return r;
}

// Dense color ids from per-tuple signatures: sort the joint signature list,
// number distinct values in sorted order.
void assign_dense(const std::vector<std::vector<int>>& sigs, size_t n_left,
                  std::vector<int>& left, std::vector<int>& right, int& classes) {
  const size_t total = sigs.size();
  std::vector<size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&sigs](size_t a, size_t b) { return sigs[a] < sigs[b]; });
  left.assign(n_left, -1);
  right.assign(total - n_left, -1);
  int next_id = -1;
  const std::vector<int>* prev = nullptr;
  for (size_t t = 0; t < total; ++t) {
    const auto& sig = sigs[idx[t]];
    if (!prev || sig != *prev) {
      ++next_id;
      prev = &sig;
    }
    if (idx[t] < n_left) {
      left[idx[t]] = next_id;
    } else {
      right[idx[t] - n_left] = next_id;
    }
  }
  classes = next_id + 1;
}

std::vector<int> decode_tuple(size_t rank, int n, int k) {
  std::vector<int> t(k);
  for (int p = k - 1; p >= 0; --p) {
    t[p] = static_cast<int>(rank % n);
    rank /= n;
  }
  return t;
}

std::vector<int> partial_iso_signature(const Group& g, std::span<const int> xs) {
  const int k = static_cast<int>(xs.size());
  std::vector<int> sig;
  sig.reserve(static_cast<size_t>(k) + static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    int rep = i;
    for (int j = 0; j < i; ++j) {
      if (xs[j] == xs[i]) {
        rep = j;
        break;
      }
    }
    sig.push_back(rep);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int p = g.mul(xs[i], xs[j]);
      int rep = -1;
      for (int l = 0; l < k; ++l) {
        if (xs[l] == p) {
          rep = l;
          break;
        }
      }
      sig.push_back(rep);
    }
  }
  return sig;
}

struct SideView {
  const Group* group;
  const std::vector<int>* colors;
  int n;
  std::vector<size_t> mult;  // positional multipliers, mult[p] = n^(k-1-p)
};

}  // namespace

Coloring initial_coloring(const Group& g, const Group& h, int k, int q, WlVersion version,
                          const WlOptions& options) {
  check_params(g, h, k, q, options);
  Coloring c;
  c.k = k;
  c.q = q;
  c.version = version;
  c.round = 0;
  c.n_left = g.order();
  c.n_right = h.order();

  const size_t n_left = pow_size(g.order(), k);
  const size_t n_right = pow_size(h.order(), k);
  std::vector<std::vector<int>> sigs(n_left + n_right);

  parallel_chunks(n_left + n_right, options.threads, [&](size_t begin, size_t end) {
    for (size_t t = begin; t < end; ++t) {
      const bool is_left = t < n_left;
      const Group& grp = is_left ? g : h;
      auto tuple = decode_tuple(is_left ? t : t - n_left, grp.order(), k);
      sigs[t] = version == WlVersion::I ? partial_iso_signature(grp, tuple)
                                        : marked_type_signature(grp, tuple);
    }
  });

  assign_dense(sigs, n_left, c.left, c.right, c.classes);
  return c;
}

Coloring refine_step(const Group& g, const Group& h, const Coloring& c, int threads) {
  if (g.order() != c.n_left || h.order() != c.n_right) {
    raise(errc::parameter_out_of_range, "coloring does not belong to these groups");
  }
  const int k = c.k;

  struct Block {
    int i, j;
  };
  std::vector<Block> blocks;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      if (i == j || c.q == 2) blocks.push_back({i, j});
    }
  }
  const size_t nb = blocks.size();

  SideView views[2] = {
      {&g, &c.left, c.n_left, {}},
      {&h, &c.right, c.n_right, {}},
  };
  for (auto& v : views) {
    v.mult.resize(k);
    size_t m = 1;
    for (int p = k - 1; p >= 0; --p) {
      v.mult[p] = m;
      m *= static_cast<size_t>(v.n);
    }
  }

  // Distinct graphs are keyed by the coordinates outside {i,j}; identical
  // graph content additionally shares one canonization.
  std::map<std::vector<int>, std::string> content_cache;
  std::mutex cache_mutex;

  // canon bytes per (side, block, complement rank)
  std::vector<std::vector<std::string>> canon(2 * nb);
  for (int s = 0; s < 2; ++s) {
    const SideView& view = views[s];
    for (size_t b = 0; b < nb; ++b) {
      const auto [bi, bj] = blocks[b];
      const int removed = bi == bj ? 1 : 2;
      const size_t complements = pow_size(view.n, k - removed);
      auto& out = canon[s * nb + b];
      out.resize(complements);
      parallel_chunks(complements, threads, [&](size_t begin, size_t end) {
        const int n = view.n;
        for (size_t cr = begin; cr < end; ++cr) {
          // Base rank with the freed positions set to 0.
          size_t base = 0;
          {
            size_t rest = cr;
            for (int p = k - 1; p >= 0; --p) {
              if (p == bi || p == bj) continue;
              base += (rest % n) * view.mult[p];
              rest /= n;
            }
          }
          if (bi == bj) {
            std::vector<int> loops(n);
            for (int y = 0; y < n; ++y) loops[y] = (*view.colors)[base + y * view.mult[bi]];
            out[cr] = canonical_class(EdgeColoredGraph::loops(std::move(loops))).bytes;
          } else {
            std::vector<int> mat(static_cast<size_t>(n) * n);
            for (int y = 0; y < n; ++y) {
              const size_t row = base + y * view.mult[bi];
              for (int z = 0; z < n; ++z) mat[static_cast<size_t>(y) * n + z] = (*view.colors)[row + z * view.mult[bj]];
            }
            {
              std::lock_guard<std::mutex> lock(cache_mutex);
              auto it = content_cache.find(mat);
              if (it != content_cache.end()) {
                out[cr] = it->second;
                continue;
              }
            }
            std::string bytes = canonical_class(EdgeColoredGraph::digraph(n, mat)).bytes;
            {
              std::lock_guard<std::mutex> lock(cache_mutex);
              content_cache.emplace(std::move(mat), bytes);
            }
            out[cr] = std::move(bytes);
          }
        }
      });
    }
  }

  // Intern the canonical classes; ids by sorted byte order.
  std::vector<std::string> distinct;
  for (const auto& v : canon) distinct.insert(distinct.end(), v.begin(), v.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto class_id = [&distinct](const std::string& bytes) {
    return static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), bytes) -
                            distinct.begin());
  };

  const size_t n_left = pow_size(c.n_left, k);
  const size_t n_right = pow_size(c.n_right, k);
  std::vector<std::vector<int>> sigs(n_left + n_right);
  parallel_chunks(n_left + n_right, threads, [&](size_t begin, size_t end) {
    std::vector<int> digits(k);
    for (size_t t = begin; t < end; ++t) {
      const int s = t < n_left ? 0 : 1;
      const SideView& view = views[s];
      size_t rank = s == 0 ? t : t - n_left;
      size_t rest = rank;
      for (int p = k - 1; p >= 0; --p) {
        digits[p] = static_cast<int>(rest % view.n);
        rest /= view.n;
      }
      std::vector<int> sig;
      sig.reserve(1 + nb);
      sig.push_back((*view.colors)[rank]);
      for (size_t b = 0; b < nb; ++b) {
        const auto [bi, bj] = blocks[b];
        size_t cr = 0;
        for (int p = 0; p < k; ++p) {
          if (p == bi || p == bj) continue;
          cr = cr * view.n + static_cast<size_t>(digits[p]);
        }
        sig.push_back(class_id(canon[s * nb + b][cr]));
      }
      sigs[t] = std::move(sig);
    }
  });

  Coloring next;
  next.k = k;
  next.q = c.q;
  next.version = c.version;
  next.round = c.round + 1;
  next.n_left = c.n_left;
  next.n_right = c.n_right;
  assign_dense(sigs, n_left, next.left, next.right, next.classes);
  return next;
}

namespace {

int distinct_count(const std::vector<int>& colors) {
  std::vector<int> copy = colors;
  std::sort(copy.begin(), copy.end());
  return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

RefinementTrace::Round trace_round(const Coloring& c) {
  return RefinementTrace::Round{c.classes, distinct_count(c.left), distinct_count(c.right)};
}

}  // namespace

WlRun run_wl(const Group& g, const Group& h, int k, int q, WlVersion version,
             const WlOptions& options) {
  WlRun run;
  run.rounds.push_back(initial_coloring(g, h, k, q, version, options));
  run.trace.rounds.push_back(trace_round(run.rounds.back()));
  for (;;) {
    if (options.max_rounds >= 0 && run.rounds.back().round >= options.max_rounds) break;
    Coloring next = refine_step(g, h, run.rounds.back(), options.threads);
    if (next.classes == run.rounds.back().classes) {
      // Refinement with an unchanged class count is the identical partition.
      run.trace.stable_round = run.rounds.back().round;
      break;
    }
    run.trace.rounds.push_back(trace_round(next));
    run.rounds.push_back(std::move(next));
  }
  return run;
}

std::pair<Coloring, RefinementTrace> stable_coloring(const Group& g, const Group& h, int k, int q,
                                                     WlVersion version, const WlOptions& options) {
  WlOptions opts = options;
  opts.max_rounds = -1;
  WlRun run = run_wl(g, h, k, q, version, opts);
  return {run.rounds.back(), run.trace};
}

bool multisets_equal(const Coloring& c) {
  if (c.left.size() != c.right.size()) return false;
  std::vector<int> l = c.left;
  std::vector<int> r = c.right;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

bool identity_colors_equal(const Coloring& c, const Group& g, const Group& h) {
  return c.identity_color(Side::left, g) == c.identity_color(Side::right, h);
}

bool distinguishes(const Group& g, const Group& h, int k, int r, int q, WlVersion version,
                   const WlOptions& options) {
  if (g.order() != h.order()) return true;  // distinguished at round 0, before any coloring
  WlOptions opts = options;
  opts.max_rounds = r >= 0 ? r : -1;
  WlRun run = run_wl(g, h, k, q, version, opts);
  if (r >= 0) return !identity_colors_equal(run.at_round(r), g, h);
  const Coloring& stable = run.stable();
  const bool by_multiset = !multisets_equal(stable);
  const bool by_identity = !identity_colors_equal(stable, g, h);
  if (by_multiset != by_identity) {
    raise(errc::internal, "stable multiset and identity-color predicates disagree");
  }
  return by_identity;
}

int first_multiset_difference(const WlRun& run) {
  for (const auto& c : run.rounds) {
    if (!multisets_equal(c)) return c.round;
  }
  return -1;
}

int first_identity_difference(const WlRun& run, const Group& g, const Group& h) {
  for (const auto& c : run.rounds) {
    if (!identity_colors_equal(c, g, h)) return c.round;
  }
  return -1;
}

}  // namespace gwl
