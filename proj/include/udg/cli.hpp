#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udg/bench.hpp"
#include "udg/convex_randomized.hpp"
#include "udg/convex_sweep.hpp"
#include "udg/general.hpp"
#include "udg/generators.hpp"
#include "udg/io.hpp"
#include "udg/lens.hpp"
#include "udg/oracle.hpp"
#include "udg/svg.hpp"

namespace udg {

namespace cli_detail {

using nlohmann::json;

/// Every report re-verifies its clique against the input before emission;
/// a failure surfaces as ContractError (exit code 2), never as silent output.
inline json clique_report(const PointSet& ps, const CliqueResult& r) {
  if (!is_clique(ps, r.indices)) {
    throw ContractError("emitted clique failed re-verification");
  }
  json j;
  j["algorithm"] = r.algorithm;
  j["clique_size"] = r.size();
  j["indices"] = r.indices;
  return j;
}

inline json trace_json(const SearchTrace& trace) {
  json probes = json::array();
  for (const ProbeRecord& p : trace.probes) {
    probes.push_back({{"k", p.k}, {"found", p.found}, {"elapsed_ms", p.elapsed_ms}});
  }
  return probes;
}

inline unsigned env_thread_cap() {
  const char* v = std::getenv("UDG_CLIQUE_THREADS");
  if (!v) return 1;
  const long n = std::strtol(v, nullptr, 10);
  return n >= 1 ? static_cast<unsigned>(n) : 1;
}

inline BenchConfig parse_bench_spec(const json& j) {
  BenchConfig config;
  config.timeout_s = j.value("timeout_s", 60.0);
  if (!j.contains("cells") || !j["cells"].is_array()) {
    throw InputError("bench spec: missing 'cells' array");
  }
  for (const json& c : j["cells"]) {
    BenchCell cell;
    GenFamily fam;
    if (!parse_family(c.value("family", std::string{}), fam)) {
      throw InputError("bench spec: unknown family");
    }
    cell.gen.family = fam;
    cell.gen.n = c.at("n").get<std::size_t>();
    cell.gen.param = c.at("param").get<double>();
    cell.gen.k_max = c.value("k_max", std::size_t{8});
    cell.algo = c.at("algo").get<std::string>();
    cell.anchor = c.value("anchor", std::size_t{0});
    cell.c = c.value("c", 3.0);
    if (!c.contains("seeds") || !c["seeds"].is_array() || c["seeds"].empty()) {
      throw InputError("bench spec: each cell needs a nonempty 'seeds' array");
    }
    for (const json& s : c["seeds"]) {
      cell.seeds.push_back(s.get<std::uint64_t>());
    }
    config.cells.push_back(std::move(cell));
  }
  return config;
}

}  // namespace cli_detail

/// Command-line driver. Args exclude the program name. Returns the process
/// exit code: 0 success, 1 input error, 2 internal contract error.
inline int cli_main(std::vector<std::string> args,
                    std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using cli_detail::json;

  CLI::App app{"maximum cliques in unit-disk graphs"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_algo;
  std::uint64_t seed = 0;
  double c_mult = 3.0;
  std::size_t thr_value = 0;
  std::size_t anchor = 0;
  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("points", solve_file, "point file")->required();
  solve->add_option("--algo", solve_algo, "general|lens|convex|convex-given")
      ->required();
  solve->add_option("--seed", seed, "RNG seed");
  solve->add_option("--c", c_mult, "repeat multiplier (convex)");
  auto* thr_opt = solve->add_option("--threshold-override", thr_value,
                                    "decision threshold override (convex)");
  auto* anchor_opt =
      solve->add_option("--anchor", anchor, "anchor id (convex-given)");

  // decide
  std::string decide_file;
  std::size_t decide_k = 1;
  auto* decide = app.add_subcommand("decide", "decide clique size k");
  decide->add_option("points", decide_file, "point file")->required();
  decide->add_option("--k", decide_k, "clique size to decide")->required();

  // gen
  std::string gen_family_str, gen_out;
  GenSpec gen_spec;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", gen_family_str,
                  "uniform|bounded_k|convex (long names accepted)")
      ->required();
  gen->add_option("--n", gen_spec.n, "point count")->required();
  gen->add_option("--param", gen_spec.param,
                  "side | separation | radius")->required();
  gen->add_option("--k-max", gen_spec.k_max, "cluster cap (bounded_k)");
  gen->add_option("--seed", gen_spec.seed, "RNG seed");
  gen->add_option("--out", gen_out, "output point file")->required();

  // bench
  std::string bench_spec_file, bench_out;
  double bench_timeout = 60.0;
  auto* bench = app.add_subcommand("bench", "run a benchmark matrix");
  bench->add_option("--spec", bench_spec_file, "JSON spec file")->required();
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_option("--timeout", bench_timeout, "per-cell timeout, seconds");

  // verify
  std::string verify_file, verify_clique;
  auto* verify = app.add_subcommand("verify", "verify a clique file");
  verify->add_option("points", verify_file, "point file")->required();
  verify->add_option("--clique", verify_clique, "clique id file")->required();

  // plot
  std::string plot_file, plot_out, plot_clique;
  std::vector<std::size_t> plot_lens;
  auto* plot = app.add_subcommand("plot", "render an instance to SVG");
  plot->add_option("points", plot_file, "point file")->required();
  plot->add_option("--out", plot_out, "SVG output file")->required();
  plot->add_option("--clique", plot_clique, "clique id file to highlight");
  plot->add_option("--lens", plot_lens, "two point ids p q")->expected(2);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*solve) {
      PointSet ps = read_points_file(solve_file);
      json report;
      auto t0 = std::chrono::steady_clock::now();
      if (solve_algo == "general") {
        auto [result, trace] = max_clique_general(ps);
        report = cli_detail::clique_report(ps, result);
        report["probes"] = cli_detail::trace_json(trace);
      } else if (solve_algo == "lens") {
        report = cli_detail::clique_report(ps, max_clique_lens_baseline(ps));
      } else if (solve_algo == "convex") {
        std::optional<std::size_t> threshold_override;
        if (!thr_opt->empty()) threshold_override = thr_value;
        RandomizedConfig cfg{c_mult, seed, threshold_override};
        ConvexSolveInfo info;
        CliqueResult result = max_clique_convex(ps, cfg, &info);
        report = cli_detail::clique_report(ps, result);
        report["seed"] = seed;
        report["threshold_k"] = info.threshold_k;
        report["branch"] = info.sampling_branch ? "sampling" : "general";
        if (info.sampling_branch) {
          report["anchors_drawn"] = info.anchors_drawn;
          report["update_counts"] = {
              {"insertions", info.sweep.total_insertions},
              {"deletions", info.sweep.total_deletions},
              {"steps", info.sweep.steps}};
        } else {
          report["probes"] = cli_detail::trace_json(info.trace);
        }
      } else if (solve_algo == "convex-given") {
        if (anchor_opt->empty()) {
          throw InputError("solve --algo convex-given requires --anchor");
        }
        SweepStats stats;
        CliqueResult result = max_clique_given_point(ps, anchor, seed, &stats);
        report = cli_detail::clique_report(ps, result);
        report["seed"] = seed;
        report["update_counts"] = {{"insertions", stats.total_insertions},
                                   {"deletions", stats.total_deletions},
                                   {"steps", stats.steps}};
      } else {
        throw InputError("unknown algorithm '" + solve_algo + "'");
      }
      auto t1 = std::chrono::steady_clock::now();
      report["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      out << report.dump(2) << '\n';
      return 0;
    }

    if (*decide) {
      PointSet ps = read_points_file(decide_file);
      validate_point_set(ps);
      const GridIndex g = build_grid(ps);
      DecisionOutcome d = decide_clique(ps, g, decide_k);
      json j;
      j["k"] = decide_k;
      j["found"] = d.found;
      if (d.witness) {
        j["witness"] = cli_detail::clique_report(ps, *d.witness);
      } else {
        j["witness"] = nullptr;
      }
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*gen) {
      if (!parse_family(gen_family_str, gen_spec.family)) {
        throw InputError("unknown family '" + gen_family_str + "'");
      }
      PointSet ps = generate(gen_spec);
      write_points_file(gen_out, ps);
      json j;
      j["family"] = family_name(gen_spec.family);
      j["n"] = ps.size();
      j["param"] = gen_spec.param;
      j["seed"] = gen_spec.seed;
      j["out"] = gen_out;
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*bench) {
      std::ifstream f(bench_spec_file);
      if (!f) throw IoError("cannot open bench spec: " + bench_spec_file);
      json spec_json;
      try {
        f >> spec_json;
      } catch (const json::exception& e) {
        throw InputError(std::string("bench spec is not valid JSON: ") +
                         e.what());
      }
      BenchConfig config = cli_detail::parse_bench_spec(spec_json);
      if (!bench->get_option("--timeout")->empty()) {
        config.timeout_s = bench_timeout;
      }
      std::vector<BenchRow> rows =
          bench_run(config, cli_detail::env_thread_cap());
      std::ostringstream csv;
      csv << bench_csv_header() << '\n';
      for (const BenchRow& r : rows) csv << bench_csv_line(r) << '\n';
      if (bench_out.empty()) {
        out << csv.str();
      } else {
        std::ofstream of(bench_out);
        if (!of) throw IoError("cannot write CSV file: " + bench_out);
        of << csv.str();
      }
      return 0;
    }

    if (*verify) {
      PointSet ps = read_points_file(verify_file);
      std::vector<std::size_t> ids = read_indices_file(verify_clique);
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        throw InputError("clique file contains duplicate ids");
      }
      const bool ok = is_clique(ps, ids);
      json j;
      j["is_clique"] = ok;
      j["size"] = ids.size();
      j["indices"] = ids;
      out << j.dump(2) << '\n';
      return ok ? 0 : 1;
    }

    if (*plot) {
      PointSet ps = read_points_file(plot_file);
      std::vector<std::size_t> clique;
      if (!plot_clique.empty()) clique = read_indices_file(plot_clique);
      std::optional<std::pair<std::size_t, std::size_t>> lens;
      if (!plot_lens.empty()) lens = {plot_lens[0], plot_lens[1]};
      render_svg_file(plot_out, ps, clique, lens);
      json j;
      j["out"] = plot_out;
      j["points"] = ps.size();
      out << j.dump(2) << '\n';
      return 0;
    }
  } catch (const ContractError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

inline int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(std::move(args));
}

}  // namespace udg
