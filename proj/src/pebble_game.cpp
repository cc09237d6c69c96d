#include "gwl/pebble_game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "gwl/structure.hpp"

namespace gwl {

GameConfig GameConfig::empty(int k) {
  GameConfig c;
  c.pebbles.assign(k, {off_board, off_board});
  return c;
}

GameConfig GameConfig::from_tuples(std::span<const int> xs, std::span<const int> ys) {
  if (xs.size() != ys.size()) raise(errc::length_mismatch, "tuples have different lengths");
  GameConfig c;
  c.pebbles.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) c.pebbles.emplace_back(xs[i], ys[i]);
  return c;
}

namespace {

constexpr int kMaxPebbles = 8;
constexpr int kHardMaxOrder = 8;
constexpr size_t kMaxMemoSlots = size_t(1) << 26;

std::vector<std::vector<int>> enumerate_bijections(const Group& g, const Group& h,
                                                   bool inverse_preserving) {
  const int n = g.order();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (inverse_preserving) {
      if (f[g.identity()] != h.identity()) continue;
      bool ok = true;
      for (int x = 0; x < n; ++x) {
        if (f[g.inv(x)] != h.inv(f[x])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

}  // namespace

PebbleSolver::PebbleSolver(const Group& g, const Group& h, int k, int q, WlVersion version,
                           const GameOptions& options)
    : g_(g), h_(h), n_(g.order()), k_(k), q_(q), version_(version), options_(options) {
  if (g.order() != h.order()) {
    raise(errc::size_mismatch, "the solver requires groups of equal order");
  }
  if (k < 1 || k > kMaxPebbles) raise(errc::parameter_out_of_range, "pebble count must be in 1..8");
  if (q < 1 || q > 3) raise(errc::parameter_out_of_range, "arity must be in 1..3");
  if (options.inverse_pruning && q != 2) {
    raise(errc::parameter_out_of_range, "inverse pruning is defined for the 2-ary game");
  }
  if (n_ > kHardMaxOrder) {
    raise(errc::budget_exceeded, "solver enumerates all bijections; order is capped at 8");
  }
  if (n_ > options.max_order && !options.allow_large) {
    raise(errc::budget_exceeded,
          "group order exceeds the intended solver scale; pass allow_large to override");
  }

  size_t slots = 1;
  for (int i = 0; i < k_; ++i) {
    slots *= static_cast<size_t>(empty_code() + 1);
    if (slots > kMaxMemoSlots) {
      raise(errc::budget_exceeded, "configuration space too large to memoize");
    }
  }

  bijections_ = enumerate_bijections(g, h, options.inverse_pruning);

  // Pebble-index subsets Spoiler may pick up, largest first.
  const int max_lift = std::min(q_, k_);
  for (int size = max_lift; size >= 1; --size) {
    for (int mask = 0; mask < (1 << k_); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != size) continue;
      std::vector<int> lift;
      for (int p = 0; p < k_; ++p) {
        if (mask & (1 << p)) lift.push_back(p);
      }
      lifts_.push_back(std::move(lift));
    }
  }
}

size_t PebbleSolver::memo_index(const std::vector<int>& codes, int rounds) const {
  std::array<int, kMaxPebbles> sorted{};
  for (int i = 0; i < k_; ++i) sorted[i] = codes[i];
  std::sort(sorted.begin(), sorted.begin() + k_);
  size_t idx = 0;
  const size_t base = static_cast<size_t>(empty_code() + 1);
  for (int i = 0; i < k_; ++i) idx = idx * base + static_cast<size_t>(sorted[i]);
  size_t slots = 1;
  for (int i = 0; i < k_; ++i) slots *= base;
  return static_cast<size_t>(rounds) * slots + idx;
}

bool PebbleSolver::fails(const std::vector<int>& codes) const {
  std::array<int, kMaxPebbles> xs{};
  std::array<int, kMaxPebbles> ys{};
  int m = 0;
  for (int i = 0; i < k_; ++i) {
    if (codes[i] == empty_code()) continue;
    xs[m] = codes[i] / n_;
    ys[m] = codes[i] % n_;
    ++m;
  }
  if (m == 0) return false;

  if (version_ == WlVersion::I) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if ((xs[i] == xs[j]) != (ys[i] == ys[j])) return true;
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const int px = g_.mul(xs[i], xs[j]);
        const int py = h_.mul(ys[i], ys[j]);
        for (int l = 0; l < m; ++l) {
          if ((px == xs[l]) != (py == ys[l])) return true;
        }
      }
    }
    return false;
  }

  // Version II: simultaneous closure of both sides; the pebbled map extends
  // to an isomorphism of the generated subgroups iff no collision appears.
  std::array<int, kHardMaxOrder> disc_g{};
  std::array<int, kHardMaxOrder> disc_h{};
  disc_g.fill(-1);
  disc_h.fill(-1);
  std::array<int, kHardMaxOrder> order_g{};
  std::array<int, kHardMaxOrder> order_h{};
  int count = 0;
  disc_g[g_.identity()] = 0;
  disc_h[h_.identity()] = 0;
  order_g[count] = g_.identity();
  order_h[count] = h_.identity();
  ++count;
  for (int head = 0; head < count; ++head) {
    for (int i = 0; i < m; ++i) {
      const int vg = g_.mul(order_g[head], xs[i]);
      const int vh = h_.mul(order_h[head], ys[i]);
      const int dg = disc_g[vg];
      const int dh = disc_h[vh];
      if (dg != dh) return true;
      if (dg < 0) {
        disc_g[vg] = count;
        disc_h[vh] = count;
        order_g[count] = vg;
        order_h[count] = vh;
        ++count;
      }
    }
  }
  return false;
}

bool PebbleSolver::win(std::vector<int>& codes, int rounds, int* cert_node) {
  if (++nodes_ > options_.node_budget) {
    raise(errc::budget_exceeded, "solver node budget exhausted");
  }
  const size_t idx = memo_index(codes, rounds);
  if (idx >= memo_.size()) memo_.resize(idx + 1, -1);

  if (building_certificate_) {
    auto it = cert_by_config_.find({codes, rounds});
    if (it != cert_by_config_.end()) {
      if (cert_node) *cert_node = it->second;
      return true;
    }
    // A cached false needs no certificate; a cached true without a node must
    // be recomputed so the strategy tree can be materialized.
    if (memo_[idx] == 0) return false;
  } else if (memo_[idx] >= 0) {
    return memo_[idx] != 0;
  }

  if (fails(codes)) {
    memo_[idx] = 1;
    if (building_certificate_) {
      cert_nodes_.push_back(CertNode{});  // leaf: empty lift, no branches
      const int id = static_cast<int>(cert_nodes_.size()) - 1;
      cert_by_config_[{codes, rounds}] = id;
      if (cert_node) *cert_node = id;
    }
    return true;
  }
  if (rounds == 0) {
    memo_[idx] = 0;
    return false;
  }

  std::array<int, kMaxPebbles> saved{};
  for (const auto& lift : lifts_) {
    const int lift_size = static_cast<int>(lift.size());
    for (int i = 0; i < lift_size; ++i) saved[i] = codes[lift[i]];

    bool beats_all = true;
    std::vector<CertNode::Branch> branches;
    if (building_certificate_) branches.reserve(bijections_.size());

    for (const auto& f : bijections_) {
      bool found = false;
      CertNode::Branch branch;
      for (int pmask = 1; pmask < (1 << lift_size) && !found; ++pmask) {
        std::array<int, 3> placed{};
        int pc = 0;
        for (int b = 0; b < lift_size; ++b) {
          if (pmask & (1 << b)) placed[pc++] = lift[b];
        }
        std::array<int, 3> vals{};
        for (;;) {
          for (int i = 0; i < lift_size; ++i) codes[lift[i]] = empty_code();
          for (int i = 0; i < pc; ++i) codes[placed[i]] = vals[i] * n_ + f[vals[i]];
          int child_cert = -1;
          if (win(codes, rounds - 1, building_certificate_ ? &child_cert : nullptr)) {
            found = true;
            if (building_certificate_) {
              branch.child = child_cert;
              for (int i = 0; i < pc; ++i) branch.placement.emplace_back(placed[i], vals[i]);
            }
            break;
          }
          // next element assignment, lexicographic
          int d = pc - 1;
          while (d >= 0 && ++vals[d] == n_) vals[d--] = 0;
          if (d < 0) break;
        }
      }
      for (int i = 0; i < lift_size; ++i) codes[lift[i]] = saved[i];
      if (!found) {
        beats_all = false;
        break;
      }
      if (building_certificate_) branches.push_back(std::move(branch));
    }

    if (beats_all) {
      memo_[memo_index(codes, rounds)] = 1;
      if (building_certificate_) {
        CertNode node;
        node.lift = lift;
        node.branches = std::move(branches);
        cert_nodes_.push_back(std::move(node));
        const int id = static_cast<int>(cert_nodes_.size()) - 1;
        cert_by_config_[{codes, rounds}] = id;
        if (cert_node) *cert_node = id;
      }
      return true;
    }
  }
  memo_[memo_index(codes, rounds)] = 0;
  return false;
}

namespace {

std::vector<int> config_codes(const GameConfig& start, int k, int n) {
  if (start.k() != k) raise(errc::parameter_out_of_range, "configuration has the wrong pebble count");
  std::vector<int> codes(k);
  for (int i = 0; i < k; ++i) {
    auto [x, y] = start.pebbles[i];
    const bool off = x == GameConfig::off_board || y == GameConfig::off_board;
    if (off) {
      if (x != GameConfig::off_board || y != GameConfig::off_board) {
        raise(errc::parameter_out_of_range, "half-placed pebble");
      }
      codes[i] = n * n;
      continue;
    }
    if (x < 0 || x >= n || y < 0 || y >= n) {
      raise(errc::parameter_out_of_range, "pebbled element out of range");
    }
    codes[i] = x * n + y;
  }
  return codes;
}

}  // namespace

bool PebbleSolver::solve(const GameConfig& start, int rounds) {
  if (rounds < 0) raise(errc::parameter_out_of_range, "negative round budget");
  std::vector<int> codes = config_codes(start, k_, n_);
  building_certificate_ = false;
  return win(codes, rounds, nullptr);
}

GameResult PebbleSolver::solve_result(const GameConfig& start, int rounds) {
  if (rounds < 0) raise(errc::parameter_out_of_range, "negative round budget");
  GameResult result;
  std::vector<int> codes = config_codes(start, k_, n_);
  if (options_.want_certificate) {
    building_certificate_ = true;
    cert_nodes_.clear();
    cert_by_config_.clear();
    int root = -1;
    result.spoiler_wins = win(codes, rounds, &root);
    building_certificate_ = false;
    if (result.spoiler_wins) {
      Certificate cert;
      cert.nodes = cert_nodes_;
      cert.root = root;
      result.certificate = std::move(cert);
    }
  } else {
    result.spoiler_wins = win(codes, rounds, nullptr);
  }
  result.nodes_visited = nodes_;
  return result;
}

GameResult spoiler_wins(const Group& g, const Group& h, const GameSpec& spec,
                        const GameConfig& start, const GameOptions& options) {
  PebbleSolver solver(g, h, spec.k, spec.q, spec.version, options);
  return solver.solve_result(start, spec.r);
}

bool verify_certificate(const Group& g, const Group& h, const GameSpec& spec,
                        const GameConfig& start, const Certificate& cert,
                        const GameOptions& options) {
  if (g.order() != h.order()) raise(errc::size_mismatch, "groups of unequal order");
  if (cert.root < 0 || cert.root >= static_cast<int>(cert.nodes.size())) {
    raise(errc::malformed_certificate, "root node out of range");
  }
  const int n = g.order();
  const int k = spec.k;
  const int max_lift = std::min(spec.q, spec.k);
  auto bijections = enumerate_bijections(g, h, options.inverse_pruning);

  // Local fails() replay, independent of the solver internals.
  auto fails = [&](const std::vector<int>& codes) {
    std::vector<int> xs, ys;
    for (int c : codes) {
      if (c == n * n) continue;
      xs.push_back(c / n);
      ys.push_back(c % n);
    }
    if (spec.version == WlVersion::I) {
      return !tuple_partial_iso(g, xs, h, ys);
    }
    return !tuple_marked_iso(g, xs, h, ys);
  };

  std::function<bool(int, std::vector<int>, int)> check = [&](int node_id, std::vector<int> codes,
                                                              int rounds) -> bool {
    if (node_id < 0 || node_id >= static_cast<int>(cert.nodes.size())) {
      raise(errc::malformed_certificate, "child node out of range");
    }
    const CertNode& node = cert.nodes[node_id];
    if (static_cast<int>(node.lift.size()) > max_lift) {
      raise(errc::malformed_certificate, "lift larger than the arity allows");
    }
    {
      std::vector<int> sorted = node.lift;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        raise(errc::malformed_certificate, "duplicate pebble in lift");
      }
      for (int p : node.lift) {
        if (p < 0 || p >= k) raise(errc::malformed_certificate, "lift pebble index out of range");
      }
    }

    if (node.branches.empty()) {
      // Leaf: after lifting, the remaining map must already fail.
      if (!node.lift.empty() && rounds < 1) return false;
      std::vector<int> remaining = codes;
      for (int p : node.lift) remaining[p] = n * n;
      return fails(remaining);
    }

    if (node.lift.empty()) raise(errc::malformed_certificate, "inner node lifts no pebbles");
    if (rounds < 1) return false;
    if (node.branches.size() != bijections.size()) return false;  // some bijection unanswered

    for (size_t fi = 0; fi < bijections.size(); ++fi) {
      const auto& f = bijections[fi];
      const auto& branch = node.branches[fi];
      if (branch.placement.empty()) raise(errc::malformed_certificate, "empty placement");
      if (branch.placement.size() > static_cast<size_t>(max_lift)) {
        raise(errc::malformed_certificate, "placement larger than the arity allows");
      }
      std::vector<int> child = codes;
      for (int p : node.lift) child[p] = n * n;
      std::vector<char> used(k, 0);
      for (auto [p, v] : branch.placement) {
        if (std::find(node.lift.begin(), node.lift.end(), p) == node.lift.end()) {
          raise(errc::malformed_certificate, "placement uses a pebble outside the lift");
        }
        if (used[p]) raise(errc::malformed_certificate, "pebble placed twice");
        used[p] = 1;
        if (v < 0 || v >= n) raise(errc::malformed_certificate, "placed element out of range");
        child[p] = v * n + f[v];
      }
      if (!check(branch.child, child, rounds - 1)) return false;
    }
    return true;
  };

  return check(cert.root, config_codes(start, k, n), spec.r);
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  for (size_t id = 0; id < cert.nodes.size(); ++id) {
    const CertNode& node = cert.nodes[id];
    out << "node " << id << (static_cast<int>(id) == cert.root ? " (root)" : "") << ": lift=[";
    for (size_t i = 0; i < node.lift.size(); ++i) {
      if (i) out << ',';
      out << node.lift[i];
    }
    out << "]";
    if (node.branches.empty()) {
      out << " win\n";
      continue;
    }
    out << "\n";
    for (size_t fi = 0; fi < node.branches.size(); ++fi) {
      const auto& b = node.branches[fi];
      out << "  f#" << fi << ":";
      for (auto [p, v] : b.placement) out << " p" << p << "<-" << v;
      out << " -> node " << b.child << "\n";
    }
  }
  return out.str();
}

}  // namespace gwl
