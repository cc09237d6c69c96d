// gwl: finite-group analysis in the Cayley-table model.
//
// Subcommands: catalog, validate, analyze, wl, game, check-equivalence.
// Machine-readable output is line-oriented key=value; all output is
// deterministic for identical invocations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gwl/catalog.hpp"
#include "gwl/io.hpp"
#include "gwl/pebble_game.hpp"
#include "gwl/sampling.hpp"
#include "gwl/structure.hpp"
#include "gwl/wl.hpp"

using namespace gwl;

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success (for wl/game: the command ran; the verdict is in the output)\n"
    "  1  check-equivalence found a contract violation\n"
    "  2  usage error\n"
    "  3  file or parse error\n"
    "  4  table validation failed\n"
    "  5  parameter out of range / scale refusal\n"
    "  6  budget exhausted\n"
    "  7  internal error\n";

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
      return 3;
    case errc::not_closed:
    case errc::no_identity:
    case errc::missing_inverse:
    case errc::not_associative:
      return 4;
    case errc::budget_exceeded:
      return 6;
    case errc::internal:
      return 7;
    default:
      return 5;
  }
}

enum class Format { human, kv };

struct GlobalOpts {
  Format format = Format::human;
  int threads = 1;
};

// Catalog names win over paths; anything else is read as a table file.
Group resolve_group(const std::string& spec_str) {
  if (auto ctor = catalog_lookup(spec_str)) return make_named(*ctor);
  return load_cayley_table(spec_str);
}

WlVersion parse_version(const std::string& s) {
  if (s == "I" || s == "1" || s == "i") return WlVersion::I;
  if (s == "II" || s == "2" || s == "ii") return WlVersion::II;
  raise(errc::parameter_out_of_range, "version must be I or II");
}

int cmd_catalog(const GlobalOpts& g, const std::string& emit, const std::string& out_path) {
  if (!emit.empty()) {
    Group grp = catalog_group(emit);
    std::string text = serialize_cayley_table(grp);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) raise(errc::parse_error, "cannot open output file: " + out_path);
      out << text;
      if (g.format == Format::kv) {
        std::cout << "emitted=" << emit << "\norder=" << grp.order() << "\nfile=" << out_path
                  << "\n";
      } else {
        std::cout << "wrote " << emit << " (order " << grp.order() << ") to " << out_path << "\n";
      }
    }
    return 0;
  }
  for (const auto& entry : catalog()) {
    if (g.format == Format::kv) {
      std::cout << "name=" << entry.name << " order=" << entry.order << "\n";
    } else {
      std::cout << entry.name << "  (order " << entry.order << ")\n";
    }
  }
  return 0;
}

int cmd_validate(const GlobalOpts& g, const std::string& path) {
  try {
    Group grp = load_cayley_table(path);
    if (g.format == Format::kv) {
      std::cout << "valid=true\norder=" << grp.order() << "\nidentity=" << grp.identity() << "\n";
    } else {
      std::cout << "VALID order=" << grp.order() << " identity=" << grp.identity() << "\n";
    }
    return 0;
  } catch (const error& e) {
    if (exit_code_for(e.code()) == 3) throw;  // file/parse problems keep their own code
    if (g.format == Format::kv) {
      std::cout << "valid=false\nerror=" << errc_name(e.code()) << "\ndetail=" << e.what() << "\n";
    } else {
      std::cout << "INVALID " << e.what() << "\n";
    }
    return 4;
  }
}

int cmd_analyze(const GlobalOpts& g, const std::string& name) {
  Group grp = resolve_group(name);
  const bool ss = is_semisimple(grp);
  auto rad = solvable_radical(grp);
  auto soc = socle(grp);
  std::string factors = "-";
  std::string pker_size = "-";
  if (ss) {
    auto dec = soc_factors(grp);
    std::ostringstream fs;
    for (size_t i = 0; i < dec.factors.size(); ++i) {
      if (i) fs << ',';
      fs << dec.factors[i].size();
    }
    factors = dec.factors.empty() ? "-" : fs.str();
    pker_size = std::to_string(pker(dec).size());
  }
  if (g.format == Format::kv) {
    std::cout << "group=" << name << "\n";
    std::cout << "order=" << grp.order() << "\n";
    std::cout << "semisimple=" << (ss ? "true" : "false") << "\n";
    std::cout << "rad=" << rad.size() << "\n";
    std::cout << "soc=" << soc.size() << "\n";
    std::cout << "factors=" << factors << "\n";
    std::cout << "pker=" << pker_size << "\n";
  } else {
    std::cout << "group:      " << name << "\n";
    std::cout << "order:      " << grp.order() << "\n";
    std::cout << "semisimple: " << (ss ? "true" : "false") << "\n";
    std::cout << "|rad|:      " << rad.size() << "\n";
    std::cout << "|soc|:      " << soc.size() << "\n";
    std::cout << "factors:    " << factors << "\n";
    std::cout << "|pker|:     " << pker_size << "\n";
  }
  return 0;
}

int cmd_wl(const GlobalOpts& g, const std::string& na, const std::string& nb, int k, int r, int q,
           const std::string& version_str, bool override_caps) {
  Group a = resolve_group(na);
  Group b = resolve_group(nb);
  WlVersion version = parse_version(version_str);

  if (a.order() != b.order()) {
    if (g.format == Format::kv) {
      std::cout << "order_left=" << a.order() << "\norder_right=" << b.order() << "\n";
      std::cout << "verdict=DISTINGUISHED round=0 reason=order\n";
    } else {
      std::cout << "orders differ (" << a.order() << " vs " << b.order() << ")\n";
      std::cout << "DISTINGUISHED at round 0\n";
    }
    return 0;
  }

  WlOptions opts;
  opts.threads = g.threads;
  opts.max_rounds = r;
  opts.override_caps = override_caps;
  WlRun run = run_wl(a, b, k, q, version, opts);

  const int md = first_multiset_difference(run);
  const int id = first_identity_difference(run, a, b);
  if (g.format == Format::kv) {
    std::cout << "k=" << k << " q=" << q << " version=" << version_name(version) << "\n";
    std::cout << "order_left=" << a.order() << "\norder_right=" << b.order() << "\n";
    for (size_t t = 0; t < run.rounds.size(); ++t) {
      const auto& tr = run.trace.rounds[t];
      std::cout << "round=" << run.rounds[t].round << " classes_left=" << tr.classes_left
                << " classes_right=" << tr.classes_right << " classes_total=" << tr.classes_total
                << "\n";
    }
    std::cout << "stable_round=" << run.trace.stable_round << "\n";
    std::cout << "multisets_equal=" << (multisets_equal(run.rounds.back()) ? "true" : "false")
              << "\n";
    std::cout << "identity_colors_equal="
              << (identity_colors_equal(run.rounds.back(), a, b) ? "true" : "false") << "\n";
    std::cout << "first_round_multiset_diff=" << md << "\n";
    std::cout << "first_round_identity_diff=" << id << "\n";
    if (id >= 0) {
      std::cout << "verdict=DISTINGUISHED round=" << id << "\n";
    } else if (run.trace.stable_round >= 0) {
      std::cout << "verdict=NOT_DISTINGUISHED stable_round=" << run.trace.stable_round << "\n";
    } else {
      std::cout << "verdict=NOT_DISTINGUISHED budget_rounds=" << run.rounds.back().round << "\n";
    }
  } else {
    for (size_t t = 0; t < run.rounds.size(); ++t) {
      const auto& tr = run.trace.rounds[t];
      std::cout << "round " << run.rounds[t].round << ": " << tr.classes_left << " classes on "
                << na << ", " << tr.classes_right << " on " << nb << " (" << tr.classes_total
                << " joint)\n";
    }
    if (md >= 0 && id < 0) {
      std::cout << "note: color multisets first differ at round " << md << "\n";
    }
    // The verdict follows the identity-tuple colors, which match the
    // empty-start game round for round.
    if (id >= 0) {
      std::cout << "DISTINGUISHED at round " << id << "\n";
    } else if (run.trace.stable_round >= 0) {
      std::cout << "NOT DISTINGUISHED (stable at round " << run.trace.stable_round << ")\n";
    } else {
      std::cout << "NOT DISTINGUISHED (round budget exhausted at round "
                << run.rounds.back().round << ")\n";
    }
  }
  return 0;
}

int cmd_game(const GlobalOpts& g, const std::string& na, const std::string& nb, int k, int r,
             int q, const std::string& version_str, bool want_cert, bool inverse_pruning,
             bool allow_large) {
  Group a = resolve_group(na);
  Group b = resolve_group(nb);
  WlVersion version = parse_version(version_str);

  if (a.order() != b.order()) {
    if (g.format == Format::kv) {
      std::cout << "spoiler_wins=true\nminimal_rounds=0\nreason=order\n";
    } else {
      std::cout << "orders differ: Spoiler wins at round 0\n";
    }
    return 0;
  }

  GameOptions opts;
  opts.inverse_pruning = inverse_pruning;
  opts.allow_large = allow_large;
  PebbleSolver solver(a, b, k, q, version, opts);
  auto start = GameConfig::empty(k);
  const bool wins = solver.solve(start, r);

  int minimal = -1;
  if (wins) {
    int lo = 0, hi = r;
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (solver.solve(start, mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    minimal = lo;
  }

  if (g.format == Format::kv) {
    std::cout << "k=" << k << " r=" << r << " q=" << q << " version=" << version_name(version)
              << "\n";
    std::cout << "spoiler_wins=" << (wins ? "true" : "false") << "\n";
    std::cout << "minimal_rounds=" << (wins ? std::to_string(minimal) : std::string("-")) << "\n";
    std::cout << "nodes=" << solver.nodes_visited() << "\n";
  } else {
    if (wins) {
      std::cout << "Spoiler wins within " << r << " rounds; minimal rounds: " << minimal << "\n";
    } else {
      std::cout << "Duplicator survives " << r << " rounds\n";
    }
  }

  if (wins && want_cert) {
    GameOptions cert_opts = opts;
    cert_opts.want_certificate = true;
    PebbleSolver cert_solver(a, b, k, q, version, cert_opts);
    auto result = cert_solver.solve_result(start, minimal);
    if (result.certificate) {
      if (!verify_certificate(a, b, GameSpec{k, minimal, q, version}, start, *result.certificate,
                              opts)) {
        raise(errc::internal, "emitted certificate failed verification");
      }
      std::cout << "certificate (verified, " << result.certificate->nodes.size() << " nodes):\n";
      std::cout << certificate_text(*result.certificate);
    }
  }
  return 0;
}

int cmd_check_equivalence(const GlobalOpts& g, int max_order, int k, int r_max, int samples) {
  if (max_order > 8) raise(errc::parameter_out_of_range, "the game side caps the order at 8");
  if (k < 1 || k > 4) raise(errc::parameter_out_of_range, "k must be in 1..4");

  int failures = 0;
  int checks = 0;
  auto report = [&](const std::string& what, bool ok) {
    ++checks;
    if (!ok) ++failures;
    if (g.format == Format::kv) {
      std::cout << "check=" << what << " ok=" << (ok ? "true" : "false") << "\n";
    } else {
      std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    }
  };

  const auto& entries = catalog();
  for (size_t ia = 0; ia < entries.size(); ++ia) {
    if (entries[ia].order > max_order) continue;
    for (size_t ib = 0; ib < entries.size(); ++ib) {
      if (entries[ib].order != entries[ia].order) continue;
      Group a = make_named(entries[ia].ctor);
      Group b = make_named(entries[ib].ctor);
      const std::string pair = entries[ia].name + " vs " + entries[ib].name;

      for (auto version : {WlVersion::I, WlVersion::II}) {
        WlOptions wl_opts;
        wl_opts.threads = g.threads;
        wl_opts.max_rounds = r_max;
        WlRun run = run_wl(a, b, k, 2, version, wl_opts);

        GameOptions game_opts;
        game_opts.allow_large = true;
        PebbleSolver solver(a, b, k, 2, version, game_opts);

        // game vs coloring, empty start plus sampled pebbled starts
        bool agree = true;
        for (int r = 0; r <= r_max; ++r) {
          if (solver.solve(GameConfig::empty(k), r) !=
              !identity_colors_equal(run.at_round(r), a, b)) {
            agree = false;
          }
        }
        Rng rng(0x5eedULL + ia * 1009 + ib * 31 + (version == WlVersion::II ? 7 : 0));
        for (int s = 0; s < samples; ++s) {
          auto xs = random_tuple(a.order(), k, rng);
          auto ys = random_tuple(b.order(), k, rng);
          auto start = GameConfig::from_tuples(xs, ys);
          for (int r = 0; r <= r_max; ++r) {
            bool color_diff =
                run.at_round(r).color(Side::left, xs) != run.at_round(r).color(Side::right, ys);
            if (solver.solve(start, r) != color_diff) agree = false;
          }
        }
        report("game-matches-coloring " + pair + " version " + version_name(version), agree);

        // the two stable non-distinguishing predicates must agree
        auto [stable, trace] = stable_coloring(a, b, k, 2, version, WlOptions{g.threads, -1, false, 256, 40});
        report("stable-multiset-iff-identity " + pair + " version " + version_name(version),
               multisets_equal(stable) == identity_colors_equal(stable, a, b));
      }

      // version comparison on the same grid
      WlOptions wl_opts;
      wl_opts.threads = g.threads;
      wl_opts.max_rounds = r_max;
      WlRun run_i = run_wl(a, b, k, 2, WlVersion::I, wl_opts);
      WlRun run_ii = run_wl(a, b, k, 2, WlVersion::II, wl_opts);
      bool ok_versions = true;
      for (int r = 0; r <= r_max; ++r) {
        const bool di = !identity_colors_equal(run_i.at_round(r), a, b);
        const bool dii = !identity_colors_equal(run_ii.at_round(r), a, b);
        if (di && !dii) ok_versions = false;
        if (dii && k + 2 <= 4) {
          WlOptions deep;
          deep.threads = g.threads;
          deep.max_rounds = r + 1;
          WlRun run_deep = run_wl(a, b, k + 2, 2, WlVersion::I, deep);
          if (identity_colors_equal(run_deep.at_round(r + 1), a, b)) ok_versions = false;
        }
      }
      report("version-comparison " + pair, ok_versions);
    }
  }

  if (g.format == Format::kv) {
    std::cout << "checks=" << checks << "\nfailures=" << failures << "\n";
  } else {
    std::cout << checks << " checks, " << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group analysis in the Cayley-table model: structure reports,\n"
               "1-ary and 2-ary Weisfeiler-Leman refinement, and an exact solver for\n"
               "the bijective pebble game."};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  GlobalOpts global;
  std::string format_str = "human";
  app.add_option("--format", format_str, "Output format: human or kv")->capture_default_str();
  int default_threads = 1;
  if (const char* env = std::getenv("GWL_THREADS")) default_threads = std::max(1, std::atoi(env));
  global.threads = default_threads;
  app.add_option("--threads", global.threads, "Worker thread count (default $GWL_THREADS or 1)");
  app.fallthrough();  // --format/--threads are accepted after the subcommand too

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in groups or emit one as a table file");
  std::string emit_name, out_path;
  catalog_cmd->add_option("--emit", emit_name, "Catalog group to emit as a Cayley table");
  catalog_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Validate a Cayley-table file");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "Table file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure report for a group");
  std::string analyze_name;
  analyze_cmd->add_option("group", analyze_name, "Catalog name or table file")->required();

  auto* wl_cmd = app.add_subcommand("wl", "Joint Weisfeiler-Leman refinement of two groups");
  std::string wl_a, wl_b, wl_version = "II";
  int wl_k = 2, wl_r = -1, wl_q = 2;
  bool wl_override = false;
  wl_cmd->add_option("a", wl_a, "Left group (catalog name or file)")->required();
  wl_cmd->add_option("b", wl_b, "Right group (catalog name or file)")->required();
  wl_cmd->add_option("--k", wl_k, "Tuple length")->capture_default_str();
  wl_cmd->add_option("--r", wl_r, "Round budget (-1: run to the stable refinement)")
      ->capture_default_str();
  wl_cmd->add_option("--q", wl_q, "Arity: 1 or 2")->capture_default_str();
  wl_cmd->add_option("--version", wl_version, "Winning condition: I or II")->capture_default_str();
  wl_cmd->add_flag("--override-caps", wl_override, "Lift the built-in scale caps");

  auto* game_cmd = app.add_subcommand("game", "Solve the bijective pebble game exactly");
  std::string game_a, game_b, game_version = "II";
  int game_k = 2, game_r = 2, game_q = 2;
  bool game_cert = false, game_pruning = false, game_large = false;
  game_cmd->add_option("a", game_a, "Left group (catalog name or file)")->required();
  game_cmd->add_option("b", game_b, "Right group (catalog name or file)")->required();
  game_cmd->add_option("--k", game_k, "Pebble count")->capture_default_str();
  game_cmd->add_option("--r", game_r, "Round budget")->capture_default_str();
  game_cmd->add_option("--q", game_q, "Arity: 1, 2 or 3")->capture_default_str();
  game_cmd->add_option("--version", game_version, "Winning condition: I or II")
      ->capture_default_str();
  game_cmd->add_flag("--certificate", game_cert, "Emit and verify a winning-strategy certificate");
  game_cmd->add_flag("--inverse-pruning", game_pruning,
                     "Restrict Duplicator to inverse-preserving bijections (q=2)");
  game_cmd->add_flag("--allow-large", game_large, "Allow orders 7..8 (slow)");

  auto* check_cmd = app.add_subcommand(
      "check-equivalence", "Cross-check the game, the coloring and the version comparison");
  int check_max_order = 6, check_k = 2, check_r = 2, check_samples = 10;
  check_cmd->add_option("--max-order", check_max_order, "Largest group order in the grid (<= 8)")
      ->capture_default_str();
  check_cmd->add_option("--k", check_k, "Tuple length / pebble count")->capture_default_str();
  check_cmd->add_option("--r-max", check_r, "Largest round budget")->capture_default_str();
  check_cmd->add_option("--samples", check_samples, "Pebbled starts sampled per pair")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    global.format = format_str == "kv" ? Format::kv : Format::human;
    if (*catalog_cmd) return cmd_catalog(global, emit_name, out_path);
    if (*validate_cmd) return cmd_validate(global, validate_path);
    if (*analyze_cmd) return cmd_analyze(global, analyze_name);
    if (*wl_cmd) {
      return cmd_wl(global, wl_a, wl_b, wl_k, wl_r, wl_q, wl_version, wl_override);
    }
    if (*game_cmd) {
      return cmd_game(global, game_a, game_b, game_k, game_r, game_q, game_version, game_cert,
                      game_pruning, game_large);
    }
    if (*check_cmd) {
      return cmd_check_equivalence(global, check_max_order, check_k, check_r, check_samples);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  }
  return 2;
}
