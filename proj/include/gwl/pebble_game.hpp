#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwl/group.hpp"
#include "gwl/wl.hpp"

namespace gwl {

/// k pebbles, r rounds, arity q (pebble pairs movable per round), winning
/// condition per version: I = the pebbled map is no partial isomorphism,
/// II = no marked isomorphism.
struct GameSpec {
  int k = 2;
  int r = 1;
  int q = 2;
  WlVersion version = WlVersion::I;
};

/// Placement state: per pebble, either off the board or a (g, h) pair.
struct GameConfig {
  static constexpr int off_board = -1;

  std::vector<std::pair<int, int>> pebbles;  // (off_board, off_board) = unplaced

  static GameConfig empty(int k);
  static GameConfig from_tuples(std::span<const int> xs, std::span<const int> ys);
  int k() const { return static_cast<int>(pebbles.size()); }
};

/// One node of a winning-strategy tree. A node with no branches claims an
/// immediate win: after lifting `lift` (possibly nothing), the remaining
/// pebbled map already fails the winning condition. An inner node lifts
/// `lift` and answers every Duplicator bijection, in enumeration order,
/// with a placement (pebble index, element of G; the partner is forced by
/// the bijection) and a child node.
struct CertNode {
  std::vector<int> lift;
  struct Branch {
    std::vector<std::pair<int, int>> placement;
    int child = -1;
  };
  std::vector<Branch> branches;
};

struct Certificate {
  std::vector<CertNode> nodes;
  int root = -1;
};

struct GameResult {
  bool spoiler_wins = false;
  std::optional<Certificate> certificate;
  uint64_t nodes_visited = 0;
};

struct GameOptions {
  bool inverse_pruning = false;   // q=2 only: restrict Duplicator to inverse-preserving bijections
  bool want_certificate = false;
  uint64_t node_budget = 500'000'000;
  int max_order = 6;              // refuse larger groups without allow_large
  bool allow_large = false;       // hard limit stays at order 8 (bijections are enumerated)
};

/// Exact solver by memoized backward induction. Spoiler wins within r rounds
/// from a configuration iff the current pebbled map already fails the
/// version's condition, or r >= 1 and some lift of at most q pebbles beats
/// every Duplicator bijection: for each bijection there is a placement of
/// 1..q lifted pebbles that wins within r-1 rounds (unplaced lifted pebbles
/// leave the board). Both groups must have the same order; unequal orders
/// are a round-0 Spoiler win handled by the caller.
class PebbleSolver {
 public:
  PebbleSolver(const Group& g, const Group& h, int k, int q, WlVersion version,
               const GameOptions& options = {});

  bool solve(const GameConfig& start, int rounds);
  GameResult solve_result(const GameConfig& start, int rounds);
  uint64_t nodes_visited() const { return nodes_; }

  /// Duplicator's bijections in the solver's enumeration order.
  const std::vector<std::vector<int>>& bijections() const { return bijections_; }

 private:
  const Group& g_;
  const Group& h_;
  int n_;
  int k_;
  int q_;
  WlVersion version_;
  GameOptions options_;
  std::vector<std::vector<int>> bijections_;
  std::vector<std::vector<int>> lifts_;  // pebble-index subsets, size 1..min(q,k)
  uint64_t nodes_ = 0;

  std::vector<int8_t> memo_;
  std::map<std::pair<std::vector<int>, int>, int> cert_by_config_;
  std::vector<CertNode> cert_nodes_;
  bool building_certificate_ = false;

  int empty_code() const { return n_ * n_; }
  size_t memo_index(const std::vector<int>& codes, int rounds) const;
  bool fails(const std::vector<int>& codes) const;
  bool win(std::vector<int>& codes, int rounds, int* cert_node);
};

GameResult spoiler_wins(const Group& g, const Group& h, const GameSpec& spec,
                        const GameConfig& start, const GameOptions& options = {});

/// Replays a certificate against every Duplicator bijection at every node.
/// Structurally broken certificates raise MalformedCertificate; incomplete
/// or losing ones return false.
bool verify_certificate(const Group& g, const Group& h, const GameSpec& spec,
                        const GameConfig& start, const Certificate& cert,
                        const GameOptions& options = {});

std::string certificate_text(const Certificate& cert);

}  // namespace gwl
