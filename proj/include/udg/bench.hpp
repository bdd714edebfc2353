#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "udg/convex_randomized.hpp"
#include "udg/convex_sweep.hpp"
#include "udg/general.hpp"
#include "udg/generators.hpp"
#include "udg/lens.hpp"

namespace udg {

struct BenchCell {
  GenSpec gen;              // seed field is ignored; seeds below are used
  std::string algo;         // general | lens | convex | convex-given
  std::size_t anchor = 0;   // convex-given only
  double c = 3.0;           // convex only
  std::vector<std::uint64_t> seeds;
};

struct BenchConfig {
  double timeout_s = 60.0;
  std::vector<BenchCell> cells;
};

/// One CSV row. Empty strings render as empty fields.
struct BenchRow {
  std::string family;
  std::string n;
  std::string param;
  std::string algo;
  std::string seed;
  std::string clique_size;
  std::string elapsed_ms;
  std::string probes;
  std::string updates;
};

inline const char* bench_csv_header() {
  return "family,n,param,algo,seed,clique_size,elapsed_ms,probes,updates";
}

inline std::string bench_csv_line(const BenchRow& r) {
  return r.family + ',' + r.n + ',' + r.param + ',' + r.algo + ',' + r.seed +
         ',' + r.clique_size + ',' + r.elapsed_ms + ',' + r.probes + ',' +
         r.updates;
}

namespace detail {

inline std::string trim_number(double v, int precision = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  std::string s = os.str();
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

struct CellRun {
  std::size_t clique_size = 0;
  double elapsed_ms = 0.0;
  std::size_t probes = 0;
  std::size_t updates = 0;
  bool has_probes = false;
  bool has_updates = false;
};

inline CellRun run_cell(const BenchCell& cell, std::uint64_t seed) {
  GenSpec spec = cell.gen;
  spec.seed = seed;
  PointSet ps = generate(spec);

  CellRun out;
  auto t0 = std::chrono::steady_clock::now();
  if (cell.algo == "general") {
    auto [result, trace] = max_clique_general(ps);
    out.clique_size = result.size();
    out.probes = trace.probes.size();
    out.has_probes = true;
  } else if (cell.algo == "lens") {
    out.clique_size = max_clique_lens_baseline(ps).size();
  } else if (cell.algo == "convex") {
    RandomizedConfig cfg;
    cfg.c = cell.c;
    cfg.seed = seed;
    ConvexSolveInfo info;
    out.clique_size = max_clique_convex(ps, cfg, &info).size();
    out.probes = info.decide_calls + info.trace.probes.size();
    out.has_probes = true;
    out.updates = info.sweep.total_insertions + info.sweep.total_deletions;
    out.has_updates = info.sampling_branch;
  } else if (cell.algo == "convex-given") {
    SweepStats stats;
    out.clique_size =
        max_clique_given_point(ps, cell.anchor, seed, &stats).size();
    out.updates = stats.total_insertions + stats.total_deletions;
    out.has_updates = true;
  } else {
    throw InputError("bench: unknown algo '" + cell.algo + "'");
  }
  auto t1 = std::chrono::steady_clock::now();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace detail

/// Runs every (cell, seed) pair and emits one row each, in spec order, plus a
/// `median` summary row per cell. Rows are deterministic for fixed seeds
/// except the elapsed_ms column; rows whose run exceeded the timeout get
/// `timeout` there instead of a number.
inline std::vector<BenchRow> bench_run(const BenchConfig& config,
                                       unsigned threads = 1) {
  struct Task {
    std::size_t cell;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < config.cells.size(); ++c) {
    for (std::uint64_t s : config.cells[c].seeds) tasks.push_back({c, s});
  }
  std::vector<detail::CellRun> runs(tasks.size());
  std::vector<std::string> errors(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      try {
        runs[t] = detail::run_cell(config.cells[tasks[t].cell], tasks[t].seed);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, tasks.size());
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw ContractError("bench cell failed: " + e);
  }

  std::vector<BenchRow> rows;
  std::size_t task_idx = 0;
  for (std::size_t c = 0; c < config.cells.size(); ++c) {
    const BenchCell& cell = config.cells[c];
    std::vector<double> sizes, elapsed, probes, updates;
    bool any_timeout = false;
    for (std::size_t s = 0; s < cell.seeds.size(); ++s, ++task_idx) {
      const detail::CellRun& run = runs[task_idx];
      const bool timed_out = run.elapsed_ms > config.timeout_s * 1000.0;
      any_timeout = any_timeout || timed_out;
      BenchRow row;
      row.family = family_name(cell.gen.family);
      row.n = std::to_string(cell.gen.n);
      row.param = detail::trim_number(cell.gen.param);
      row.algo = cell.algo;
      row.seed = std::to_string(cell.seeds[s]);
      row.clique_size = std::to_string(run.clique_size);
      row.elapsed_ms =
          timed_out ? "timeout" : detail::trim_number(run.elapsed_ms);
      row.probes = run.has_probes ? std::to_string(run.probes) : "";
      row.updates = run.has_updates ? std::to_string(run.updates) : "";
      sizes.push_back(double(run.clique_size));
      elapsed.push_back(run.elapsed_ms);
      if (run.has_probes) probes.push_back(double(run.probes));
      if (run.has_updates) updates.push_back(double(run.updates));
      rows.push_back(std::move(row));
    }
    if (cell.seeds.size() > 1) {
      BenchRow med;
      med.family = family_name(cell.gen.family);
      med.n = std::to_string(cell.gen.n);
      med.param = detail::trim_number(cell.gen.param);
      med.algo = cell.algo;
      med.seed = "median";
      med.clique_size = detail::trim_number(detail::median_of(sizes));
      med.elapsed_ms = any_timeout
                           ? "timeout"
                           : detail::trim_number(detail::median_of(elapsed));
      med.probes =
          probes.empty() ? "" : detail::trim_number(detail::median_of(probes));
      med.updates = updates.empty()
                        ? ""
                        : detail::trim_number(detail::median_of(updates));
      rows.push_back(std::move(med));
    }
  }
  return rows;
}

/// Least-squares slope of log(elapsed) against log(n); scaling-trend helper.
inline double fit_loglog_slope(const std::vector<std::pair<double, double>>&
                                   n_vs_elapsed) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = double(n_vs_elapsed.size());
  for (const auto& [n, t] : n_vs_elapsed) {
    const double x = std::log(n);
    const double y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace udg
